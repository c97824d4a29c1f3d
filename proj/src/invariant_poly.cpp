#include "scw/invariant_poly.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "scw/error.hpp"
#include "scw/kernels.hpp"

namespace scw {

namespace {

std::size_t flat_index(const std::vector<int>& idx, int dim) {
    std::size_t f = 0;
    for (int a : idx) f = f * dim + a;
    return f;
}

std::size_t power(int base, int k) {
    std::size_t p = 1;
    for (int i = 0; i < k; ++i) p *= base;
    return p;
}

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Rational ratio(const mpz_class& a, const mpz_class& b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

/// prod over multiplicities of m! for a sorted index tuple.
mpz_class multiplicity_factorial(const std::vector<int>& sorted) {
    mpz_class f = 1;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        f *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return f;
}

/// Visit every nondecreasing index tuple of length k over [0, dim).
template <class F>
void for_each_sorted(int dim, int k, F&& f) {
    std::vector<int> idx(k, 0);
    while (true) {
        f(idx);
        int p = k - 1;
        while (p >= 0 && idx[p] == dim - 1) --p;
        if (p < 0) return;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[p];
    }
}

/// Tensor from values on sorted tuples, copied to every rearrangement.
std::vector<Scalar> symmetric_tensor(int dim, int k, const std::function<Scalar(const std::vector<int>&)>& value) {
    std::vector<Scalar> t(power(dim, k));
    for_each_sorted(dim, k, [&](const std::vector<int>& sorted) {
        const Scalar v = value(sorted);
        if (v.is_zero()) return;
        std::vector<int> perm = sorted;
        do t[flat_index(perm, dim)] = v;
        while (std::next_permutation(perm.begin(), perm.end()));
    });
    return t;
}

void require_arity(int k) {
    if (k < 1) fail(ErrorKind::invalid_argument, "invariant polynomial arity must be at least 1");
}

Coords random_coords(Rng& rng, int dim, bool exact) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Coords c(dim);
    for (auto& v : c) v = exact ? Scalar(random_rational(rng)) : Scalar::from_double(u(rng));
    return c;
}

double defect(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a == b ? 0.0 : std::max(1.0, std::abs((a - b).to_complex()));
    return std::abs(a.to_complex() - b.to_complex());
}

}  // namespace

InvariantPolynomial::InvariantPolynomial(AlgebraPtr algebra, int arity, std::string name, Kind kind,
                                         std::vector<Scalar> tensor)
    : algebra_(std::move(algebra)), arity_(arity), name_(std::move(name)), kind_(kind), tensor_(std::move(tensor)) {
    require_arity(arity_);
    if (tensor_.size() != power(algebra_->dim(), arity_))
        fail(ErrorKind::invalid_argument, "tensor size does not match arity and algebra");
    std::vector<int> idx(arity_, 0);
    for (std::size_t f = 0; f < tensor_.size(); ++f) {
        std::size_t rest = f;
        for (int p = arity_ - 1; p >= 0; --p) {
            idx[p] = static_cast<int>(rest % algebra_->dim());
            rest /= algebra_->dim();
        }
        if (!tensor_[f].is_zero()) entries_.push_back({idx, tensor_[f]});
    }
}

bool InvariantPolynomial::is_exact() const {
    for (const auto& e : entries_)
        if (!e.value.is_exact()) return false;
    return true;
}

const Scalar& InvariantPolynomial::coefficient(const std::vector<int>& index) const {
    if (static_cast<int>(index.size()) != arity_) fail(ErrorKind::invalid_argument, "wrong number of indices");
    return tensor_.at(flat_index(index, algebra_->dim()));
}

Scalar InvariantPolynomial::evaluate(const std::vector<Coords>& args) const {
    if (static_cast<int>(args.size()) != arity_) fail(ErrorKind::invalid_argument, "wrong number of arguments");
    for (const auto& a : args)
        if (static_cast<int>(a.size()) != algebra_->dim())
            fail(ErrorKind::algebra_mismatch, "argument does not belong to " + algebra_->name());
    Scalar acc;
    for (const auto& e : entries_) {
        Scalar term = e.value;
        for (int p = 0; p < arity_ && !term.is_zero(); ++p) term *= args[p][e.index[p]];
        acc += term;
    }
    return acc;
}

InvariantPolynomial sym_trace_poly(const AlgebraPtr& g, int k) {
    require_arity(k);
    const auto& basis = g->basis();
    auto tensor = symmetric_tensor(g->dim(), k, [&](const std::vector<int>& sorted) {
        Scalar sum;
        std::vector<int> perm = sorted;
        do {
            ScalarMatrix m = basis[perm[0]];
            for (int p = 1; p < k; ++p) m = m * basis[perm[p]];
            sum += m.trace();
        } while (std::next_permutation(perm.begin(), perm.end()));
        return sum * Scalar(ratio(multiplicity_factorial(sorted), factorial(k)));
    });
    return {g, k, "symtrace:" + std::to_string(k), InvariantPolynomial::Kind::symtrace, std::move(tensor)};
}

InvariantPolynomial chern_polynomial(const AlgebraPtr& g, int k) {
    require_arity(k);
    if (!g->is_unitary()) fail(ErrorKind::unsupported, "Chern polynomials need u(n) or su(n), not " + g->name());
    const auto& basis = g->basis();
    // (i tau)^{-k} / k!
    Scalar norm(ratio(1, factorial(k)));
    for (int p = 0; p < k; ++p) norm *= Scalar::gaussian(0, 1, 1).inverse();
    auto tensor = symmetric_tensor(g->dim(), k, [&](const std::vector<int>& sorted) {
        std::vector<int> pi(k);
        std::iota(pi.begin(), pi.end(), 0);
        Scalar sum;
        do {
            std::vector<bool> seen(k, false);
            Scalar term(1);
            int transpositions = 0;
            for (int start = 0; start < k; ++start) {
                if (seen[start]) continue;
                ScalarMatrix m = ScalarMatrix::identity(g->matrix_size());
                int len = 0;
                for (int j = start; !seen[j]; j = pi[j], ++len) {
                    seen[j] = true;
                    m = m * basis[sorted[j]];
                }
                transpositions += len - 1;
                term *= m.trace();
            }
            sum += transpositions % 2 ? -term : term;
        } while (std::next_permutation(pi.begin(), pi.end()));
        return sum * norm;
    });
    return {g, k, "chern:" + std::to_string(k), InvariantPolynomial::Kind::chern, std::move(tensor)};
}

InvariantPolynomial polarize(const AlgebraPtr& g, const Poly& p) {
    if (p.nvars() != g->dim()) fail(ErrorKind::algebra_mismatch, "polynomial variables do not match the algebra");
    const int k = p.degree();
    if (p.is_zero() || k < 1 || !p.is_homogeneous(k))
        fail(ErrorKind::invalid_argument, "polarize needs a nonzero homogeneous polynomial of positive degree");
    auto tensor = symmetric_tensor(g->dim(), k, [&](const std::vector<int>& sorted) {
        Exponents e{};
        for (int a : sorted) ++e[a];
        return p.coefficient(e) * Scalar(ratio(multiplicity_factorial(sorted), factorial(k)));
    });
    return {g, k, "polarized:" + std::to_string(k), InvariantPolynomial::Kind::polarized, std::move(tensor)};
}

Poly diagonal(const InvariantPolynomial& rho) {
    Poly p(rho.algebra()->dim());
    for (const auto& e : rho.entries()) {
        Exponents ex{};
        for (int a : e.index) ++ex[a];
        p.add_term(ex, e.value);
    }
    return p;
}

InvariantPolynomial reznikov_pullback(const AlgebraPtr& g, int k, int order) {
    require_arity(k);
    if (g->name() != "su2") fail(ErrorKind::unsupported, "Reznikov pullback is implemented for su2 only");
    if (order < 2) fail(ErrorKind::invalid_argument, "quadrature order must be at least 2");

    // nodes of the product rule on the unit sphere
    std::vector<double> zs, wz;
    for (double r : boost::math::legendre_p_zeros<double>(order)) {
        const double dp = boost::math::legendre_p_prime(order, r);
        const double w = 2.0 / ((1.0 - r * r) * dp * dp);
        zs.push_back(r);
        wz.push_back(w);
        if (r != 0.0) {
            zs.push_back(-r);
            wz.push_back(w);
        }
    }
    const int m = 2 * order;
    std::vector<double> px, py, pz, w;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const double rho = std::sqrt(std::max(0.0, 1.0 - zs[i] * zs[i]));
        for (int j = 0; j < m; ++j) {
            const double phi = kTau * j / m;
            px.push_back(rho * std::cos(phi));
            py.push_back(rho * std::sin(phi));
            pz.push_back(zs[i]);
            w.push_back(wz[i] / (2.0 * m));
        }
    }
    const double* axes[3] = {px.data(), py.data(), pz.data()};
    auto tensor = symmetric_tensor(3, k, [&](const std::vector<int>& sorted) {
        std::vector<const double*> cols;
        for (int a : sorted) cols.push_back(axes[a]);
        return Scalar::from_double(kernels::weighted_product_sum(w, cols));
    });
    return {g, k, "reznikov:" + std::to_string(k), InvariantPolynomial::Kind::reznikov, std::move(tensor)};
}

InvariantPolynomial parse_poly_spec(const AlgebraPtr& g, std::string_view spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = spec.find(':', start);
        parts.emplace_back(spec.substr(start, colon == std::string_view::npos ? colon : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty())
            fail(ErrorKind::invalid_argument, "bad number '" + s + "' in polynomial spec '" + std::string(spec) + "'");
        return v;
    };
    if (parts.size() < 2) fail(ErrorKind::invalid_argument, "polynomial spec must look like name:k, got '" + std::string(spec) + "'");
    const int k = to_int(parts[1]);
    if (parts[0] == "symtrace" && parts.size() == 2) return sym_trace_poly(g, k);
    if (parts[0] == "chern" && parts.size() == 2) return chern_polynomial(g, k);
    if (parts[0] == "reznikov" && parts.size() <= 3) {
        int order = 32;
        if (parts.size() == 3) {
            if (parts[2].rfind("order=", 0) != 0)
                fail(ErrorKind::invalid_argument, "expected order=<n> in '" + std::string(spec) + "'");
            order = to_int(parts[2].substr(6));
        }
        return reznikov_pullback(g, k, order);
    }
    fail(ErrorKind::invalid_argument, "unknown polynomial spec '" + std::string(spec) + "'");
}

PropertyCheck check_symmetry(const InvariantPolynomial& rho, Rng& rng, int samples) {
    PropertyCheck out;
    const int k = rho.arity();
    const bool exact = rho.is_exact();
    for (int s = 0; s < samples; ++s) {
        std::vector<Coords> args;
        for (int p = 0; p < k; ++p) args.push_back(random_coords(rng, rho.algebra()->dim(), exact));
        const Scalar base = rho.evaluate(args);
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        auto check = [&] {
            std::vector<Coords> permuted;
            for (int p : perm) permuted.push_back(args[p]);
            out.max_defect = std::max(out.max_defect, defect(rho.evaluate(permuted), base));
        };
        if (k <= 3) {
            while (std::next_permutation(perm.begin(), perm.end())) check();
        } else {
            for (int r = 0; r < 24; ++r) {
                std::shuffle(perm.begin(), perm.end(), rng);
                check();
            }
        }
    }
    out.ok = exact ? out.max_defect == 0.0 : out.max_defect <= 1e-12;
    out.detail = "symmetry defect " + std::to_string(out.max_defect);
    return out;
}

PropertyCheck check_multilinearity(const InvariantPolynomial& rho, Rng& rng, int samples) {
    PropertyCheck out;
    const int k = rho.arity();
    const bool exact = rho.is_exact();
    std::uniform_int_distribution<int> slot_pick(0, k - 1);
    for (int s = 0; s < samples; ++s) {
        std::vector<Coords> args;
        for (int p = 0; p < k; ++p) args.push_back(random_coords(rng, rho.algebra()->dim(), exact));
        const int slot = slot_pick(rng);
        const Coords y = random_coords(rng, rho.algebra()->dim(), exact);
        const Scalar a(random_rational(rng)), b(random_rational(rng));
        std::vector<Coords> mixed = args, only_y = args;
        for (int i = 0; i < rho.algebra()->dim(); ++i) mixed[slot][i] = a * args[slot][i] + b * y[i];
        only_y[slot] = y;
        out.max_defect = std::max(out.max_defect,
                                  defect(rho.evaluate(mixed), a * rho.evaluate(args) + b * rho.evaluate(only_y)));
    }
    out.ok = exact ? out.max_defect == 0.0 : out.max_defect <= 1e-10;
    out.detail = "multilinearity defect " + std::to_string(out.max_defect);
    return out;
}

PropertyCheck check_ad_invariance(const InvariantPolynomial& rho, Rng& rng, int probes, double tol) {
    PropertyCheck out;
    const auto& g = *rho.algebra();
    double worst_ratio = 0.0;
    for (int s = 0; s < probes; ++s) {
        const Eigen::MatrixXcd h = g.exp(random_coords(rng, g.dim(), false));
        std::vector<Coords> args, moved;
        for (int p = 0; p < rho.arity(); ++p) {
            args.push_back(random_coords(rng, g.dim(), false));
            moved.push_back(g.ad(h, args.back()));
        }
        const Scalar before = rho.evaluate(args);
        const double d = std::abs(rho.evaluate(moved).to_complex() - before.to_complex());
        out.max_defect = std::max(out.max_defect, d);
        worst_ratio = std::max(worst_ratio, d / (1.0 + std::abs(before.to_complex())));
    }
    out.ok = worst_ratio <= tol;
    out.detail = "max |rho(Ad v) - rho(v)| = " + std::to_string(out.max_defect);
    return out;
}

}  // namespace scw
