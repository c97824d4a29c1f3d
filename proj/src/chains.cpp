#include "scw/chains.hpp"

#include <sstream>

#include "scw/error.hpp"

namespace scw {

bool Cochain::is_zero() const {
    for (const auto& v : values)
        if (!v.is_zero()) return false;
    return true;
}

bool Cochain::is_exact() const {
    for (const auto& v : values)
        if (!v.is_exact()) return false;
    return true;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (o.dim != dim || o.values.size() != values.size()) fail(ErrorKind::invalid_argument, "cochain shapes differ");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (o.dim != dim || o.values.size() != values.size()) fail(ErrorKind::invalid_argument, "cochain shapes differ");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

bool Cochain::near(const Cochain& o, double tol) const {
    if (o.dim != dim || o.values.size() != values.size()) return false;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].near(o.values[i], tol)) return false;
    return true;
}

std::string Cochain::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i].to_string();
    out << "]";
    return out.str();
}

RationalMatrix boundary_operator(const SimplicialSet& x, int k) {
    RationalMatrix m(x.count(k - 1), x.count(k));
    if (k <= 0) return m;
    for (int idx = 0; idx < x.count(k); ++idx) {
        for (int i = 0; i <= k; ++i) {
            const Simplex& f = x.face({k, idx}, i);
            if (!f.nondegenerate()) continue;
            m(f.base.index, idx) += (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

std::vector<int> betti_numbers(const SimplicialSet& x, int max_dim) {
    std::vector<int> ranks(max_dim + 2, 0);
    for (int k = 1; k <= max_dim + 1; ++k) ranks[k] = rank(boundary_operator(x, k));
    std::vector<int> betti;
    for (int k = 0; k <= max_dim; ++k) betti.push_back(x.count(k) - ranks[k] - ranks[k + 1]);
    return betti;
}

Chain boundary(const SimplicialSet& x, const Chain& c) {
    Chain out{c.dim - 1, std::vector<Scalar>(x.count(c.dim - 1))};
    if (c.dim <= 0) return out;
    for (int idx = 0; idx < x.count(c.dim); ++idx) {
        if (c.coeffs[idx].is_zero()) continue;
        for (int i = 0; i <= c.dim; ++i) {
            const Simplex& f = x.face({c.dim, idx}, i);
            if (!f.nondegenerate()) continue;
            if (i % 2 == 0)
                out.coeffs[f.base.index] += c.coeffs[idx];
            else
                out.coeffs[f.base.index] -= c.coeffs[idx];
        }
    }
    return out;
}

Cochain coboundary(const SimplicialSet& x, const Cochain& c) {
    Cochain out = Cochain::zero(x, c.dim + 1);
    const int k = c.dim + 1;
    for (int idx = 0; idx < x.count(k); ++idx) {
        for (int i = 0; i <= k; ++i) {
            const Simplex& f = x.face({k, idx}, i);
            if (!f.nondegenerate()) continue;
            if (i % 2 == 0)
                out.values[idx] += c.values[f.base.index];
            else
                out.values[idx] -= c.values[f.base.index];
        }
    }
    return out;
}

Scalar pairing(const Cochain& c, const Chain& z) {
    if (c.dim != z.dim || c.values.size() != z.coeffs.size())
        fail(ErrorKind::invalid_argument, "pairing of a cochain and chain of different shapes");
    Scalar acc;
    for (std::size_t i = 0; i < z.coeffs.size(); ++i)
        if (!z.coeffs[i].is_zero()) acc += c.values[i] * z.coeffs[i];
    return acc;
}

CoboundaryResult is_coboundary(const SimplicialSet& x, const Cochain& c) {
    CoboundaryResult out;
    const int k = c.dim;
    // d : C^{k-1} -> C^k has matrix boundary_operator(x, k)^T.
    const RationalMatrix delta = boundary_operator(x, k).transpose();
    LinearSolve s = solve(delta, c.values);
    if (s.solution) {
        out.witness = Cochain{k - 1, std::move(*s.solution)};
    } else {
        Chain z{k, {}};
        for (const auto& y : primitive_integer_vector(*s.certificate)) z.coeffs.emplace_back(y);
        out.certificate = std::move(z);
    }
    return out;
}

std::vector<Chain> homology_basis(const SimplicialSet& x, int k) {
    const RationalMatrix image = boundary_operator(x, k + 1);
    const auto cycles = kernel_basis(boundary_operator(x, k));
    const int n = x.count(k);
    std::vector<std::vector<Rational>> span;
    for (int c = 0; c < image.cols(); ++c) {
        std::vector<Rational> col(n);
        for (int r = 0; r < n; ++r) col[r] = image(r, c);
        span.push_back(col);
    }
    auto rank_of = [&](const std::vector<std::vector<Rational>>& vecs) {
        RationalMatrix m(n, static_cast<int>(vecs.size()));
        for (std::size_t c = 0; c < vecs.size(); ++c)
            for (int r = 0; r < n; ++r) m(r, static_cast<int>(c)) = vecs[c][r];
        return rank(m);
    };
    int current = rank_of(span);
    std::vector<Chain> basis;
    for (const auto& z : cycles) {
        span.push_back(z);
        const int next = rank_of(span);
        if (next == current) {
            span.pop_back();
            continue;
        }
        current = next;
        Chain chain{k, {}};
        for (const auto& q : primitive_integer_vector(z)) chain.coeffs.emplace_back(q);
        basis.push_back(std::move(chain));
    }
    return basis;
}

Cochain pullback_cochain(const SimplicialMap& f, const Cochain& c) {
    Cochain out = Cochain::zero(*f.source(), c.dim);
    for (int idx = 0; idx < f.source()->count(c.dim); ++idx) {
        const Simplex& img = f.image({c.dim, idx});
        if (img.nondegenerate()) out.values[idx] = c.values[img.base.index];
    }
    return out;
}

Chain push_chain(const SimplicialMap& f, const Chain& z) {
    Chain out{z.dim, std::vector<Scalar>(f.target()->count(z.dim))};
    for (int idx = 0; idx < f.source()->count(z.dim); ++idx) {
        const Simplex& img = f.image({z.dim, idx});
        if (img.nondegenerate()) out.coeffs[img.base.index] += z.coeffs[idx];
    }
    return out;
}

}  // namespace scw
