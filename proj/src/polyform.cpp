#include "scw/polyform.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "scw/error.hpp"

namespace scw {

std::vector<int> mask_indices(IndexMask m) {
    std::vector<int> out;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1u) out.push_back(v);
    return out;
}

int wedge_sign(IndexMask a, IndexMask b) {
    if (a & b) return 0;
    int swaps = 0;
    for (int v : mask_indices(b)) swaps += std::popcount(a >> (v + 1));
    return swaps % 2 ? -1 : 1;
}

namespace {

bool tuple_less(IndexMask a, IndexMask b) { return mask_indices(a) < mask_indices(b); }

}  // namespace

PolyForm::PolyForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || dim > kMaxVars) fail(ErrorKind::invalid_argument, "form ambient dimension out of range");
    if (degree < 0) fail(ErrorKind::degree_mismatch, "negative form degree");
}

PolyForm PolyForm::function(const Poly& f) {
    PolyForm w(f.nvars(), 0);
    w.add_component(0, f);
    return w;
}

PolyForm PolyForm::monomial_form(const Poly& f, const std::vector<int>& indices) {
    PolyForm w(f.nvars(), static_cast<int>(indices.size()));
    IndexMask m = 0;
    int sign = 1;
    for (int v : indices) {
        if (v < 0 || v >= f.nvars()) fail(ErrorKind::invalid_argument, "differential index out of range");
        const int s = wedge_sign(m, IndexMask{1} << v);
        if (s == 0) return w;
        sign *= s;
        m |= IndexMask{1} << v;
    }
    w.add_component(m, sign > 0 ? f : -f);
    return w;
}

PolyForm PolyForm::differential(int dim, int v) {
    return monomial_form(Poly::constant(dim, Scalar(1)), {v});
}

Poly PolyForm::component(IndexMask m) const {
    auto it = comps_.find(m);
    return it == comps_.end() ? Poly(dim_) : it->second;
}

void PolyForm::add_component(IndexMask m, const Poly& f) {
    if (std::popcount(m) != degree_ || (dim_ < 32 && (m >> dim_) != 0))
        fail(ErrorKind::degree_mismatch, "component does not match form degree/dimension");
    if (f.nvars() != dim_) fail(ErrorKind::invalid_argument, "component polynomial has wrong variable count");
    if (f.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(m, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

bool PolyForm::is_exact() const {
    for (const auto& [m, f] : comps_)
        if (!f.is_exact()) return false;
    return true;
}

PolyForm PolyForm::to_float() const {
    PolyForm r(dim_, degree_);
    for (const auto& [m, f] : comps_) r.comps_.emplace(m, f.to_float());
    return r;
}

int PolyForm::poly_degree() const {
    int d = -1;
    for (const auto& [m, f] : comps_) d = std::max(d, f.degree());
    return d;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
    if (o.dim_ != dim_ || o.degree_ != degree_) fail(ErrorKind::degree_mismatch, "adding forms of different type");
    for (const auto& [m, f] : o.comps_) add_component(m, f);
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
    if (o.dim_ != dim_ || o.degree_ != degree_) fail(ErrorKind::degree_mismatch, "subtracting forms of different type");
    for (const auto& [m, f] : o.comps_) add_component(m, -f);
    return *this;
}

PolyForm& PolyForm::operator*=(const Scalar& c) {
    for (auto it = comps_.begin(); it != comps_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? comps_.erase(it) : std::next(it);
    }
    return *this;
}

PolyForm PolyForm::operator-() const {
    PolyForm r = *this;
    for (auto& [m, f] : r.comps_) f = -f;
    return r;
}

PolyForm operator*(const Poly& f, const PolyForm& a) {
    PolyForm r(a.dim_, a.degree_);
    for (const auto& [m, g] : a.comps_) r.add_component(m, f * g);
    return r;
}

bool PolyForm::near(const PolyForm& o, double tol) const {
    if (o.dim_ != dim_ || o.degree_ != degree_) return false;
    PolyForm diff = *this - o;
    for (const auto& [m, f] : diff.comps_)
        for (const auto& [e, c] : f.terms())
            if (std::abs(c.to_complex()) > tol) return false;
    return true;
}

std::string PolyForm::serialize() const {
    std::ostringstream out;
    out << "form v1; dim " << dim_ << "; deg " << degree_ << ";\n";
    std::vector<IndexMask> keys;
    for (const auto& [m, f] : comps_) keys.push_back(m);
    std::sort(keys.begin(), keys.end(), tuple_less);
    for (IndexMask m : keys) {
        out << "comp";
        for (int v : mask_indices(m)) out << " " << v + 1;
        out << ": " << comps_.at(m).to_string() << "\n";
    }
    return out.str();
}

PolyForm PolyForm::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<PolyForm> form;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (!form) {
            int d = 0, k = 0;
            char tail = 0;
            if (std::sscanf(line.c_str(), "form v1; dim %d; deg %d%c", &d, &k, &tail) != 3 || tail != ';')
                throw ParseError(line_no, "expected 'form v1; dim <d>; deg <k>;'");
            try {
                form.emplace(d, k);
            } catch (const Error& e) {
                throw ParseError(line_no, e.what());
            }
            continue;
        }
        if (line.rfind("comp", 0) != 0) throw ParseError(line_no, "expected 'comp' record");
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "missing ':' in comp record");
        std::istringstream idx(line.substr(4, colon - 4));
        IndexMask m = 0;
        int v = 0;
        int prev = 0;
        while (idx >> v) {
            if (v <= prev || v > form->dim()) throw ParseError(line_no, "component indices must increase within range");
            m |= IndexMask{1} << (v - 1);
            prev = v;
        }
        if (!idx.eof()) throw ParseError(line_no, "bad component index");
        try {
            Poly f = Poly::parse(std::string_view(line).substr(colon + 1), form->dim());
            if (form->comps_.count(m)) throw ParseError(line_no, "duplicate component");
            form->add_component(m, f);
        } catch (const ParseError& e) {
            throw ParseError(line_no, e.what());
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!form) throw ParseError(line_no, "missing form header");
    return *form;
}

PolyForm d_form(const PolyForm& w) {
    if (w.degree() >= w.dim()) return PolyForm(w.dim(), w.degree() + 1);
    PolyForm r(w.dim(), w.degree() + 1);
    for (const auto& [m, f] : w.components()) {
        for (int v = 0; v < w.dim(); ++v) {
            const IndexMask bit = IndexMask{1} << v;
            if (m & bit) continue;
            Poly df = f.derivative(v);
            if (df.is_zero()) continue;
            const int sign = wedge_sign(bit, m);
            r.add_component(m | bit, sign > 0 ? df : -df);
        }
    }
    return r;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.dim() != b.dim()) fail(ErrorKind::invalid_argument, "wedge of forms on different simplices");
    const int deg = a.degree() + b.degree();
    if (deg > a.dim()) return PolyForm(a.dim(), deg);
    PolyForm r(a.dim(), deg);
    for (const auto& [ma, fa] : a.components()) {
        for (const auto& [mb, fb] : b.components()) {
            const int sign = wedge_sign(ma, mb);
            if (sign == 0) continue;
            Poly p = fa * fb;
            r.add_component(ma | mb, sign > 0 ? p : -p);
        }
    }
    return r;
}

Scalar integrate_top(const PolyForm& w) {
    if (w.degree() != w.dim())
        fail(ErrorKind::degree_mismatch, "integrate_top needs a degree-" + std::to_string(w.dim()) + " form, got degree " +
                                             std::to_string(w.degree()));
    Scalar acc;
    for (const auto& [m, f] : w.components()) {
        for (const auto& [e, c] : f.terms()) {
            mpz_class num = 1;
            int total = w.dim();
            for (int v = 0; v < w.dim(); ++v) {
                mpz_class fact;
                mpz_fac_ui(fact.get_mpz_t(), e[v]);
                num *= fact;
                total += e[v];
            }
            mpz_class den;
            mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(total));
            acc += c * Scalar(Rational(num, den));
        }
    }
    return acc;
}

std::vector<std::vector<int>> bernstein_indices(int k, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> alpha(k + 1, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == k) {
            alpha[k] = left;
            out.push_back(alpha);
            return;
        }
        for (int a = left; a >= 0; --a) {
            alpha[pos] = a;
            self(self, pos + 1, left - a);
        }
    };
    rec(rec, 0, m);
    return out;
}

Poly barycentric(int d, int j) {
    if (j == 0) {
        Poly t = Poly::constant(d, Scalar(1));
        for (int v = 0; v < d; ++v) t -= Poly::variable(d, v);
        return t;
    }
    return Poly::variable(d, j - 1);
}

namespace {

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Rational ratio(const mpz_class& num, const mpz_class& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Bernstein control points of degree m for polynomial coordinates on Delta^k.
std::vector<std::vector<Rational>> to_bernstein(const std::vector<Poly>& coords, int k, int m) {
    const auto indices = bernstein_indices(k, m);
    std::vector<std::vector<Rational>> control(indices.size(), std::vector<Rational>(coords.size()));
    // homogenize x_i -> t_i and 1 -> (t_0 + ... + t_k)
    Poly sum(k + 1);
    for (int v = 0; v <= k; ++v) sum += Poly::variable(k + 1, v);
    std::vector<Poly> subs;
    for (int v = 1; v <= k; ++v) subs.push_back(Poly::variable(k + 1, v));
    for (std::size_t j = 0; j < coords.size(); ++j) {
        Poly h(k + 1);
        for (const auto& [e, c] : coords[j].terms()) {
            const int deg = total_degree(e);
            if (deg > m) fail(ErrorKind::invalid_argument, "Bernstein degree too small for coordinate polynomial");
            Exponents shifted{};
            for (int v = 0; v < k; ++v) shifted[v + 1] = e[v];
            h += Poly::monomial(k + 1, shifted, c) * sum.pow(m - deg);
        }
        for (std::size_t a = 0; a < indices.size(); ++a) {
            Exponents ex{};
            mpz_class alpha_fact = 1;
            for (int v = 0; v <= k; ++v) {
                ex[v] = static_cast<std::uint8_t>(indices[a][v]);
                alpha_fact *= factorial(indices[a][v]);
            }
            const auto value = h.coefficient(ex).as_rational();
            if (!value) fail(ErrorKind::invalid_argument, "Bernstein control points need rational coordinates");
            control[a][j] = *value * ratio(alpha_fact, factorial(m));
        }
    }
    return control;
}

}  // namespace

PolyMap PolyMap::bernstein(int source_dim, int target_dim, int degree, std::vector<std::vector<Rational>> control) {
    const auto indices = bernstein_indices(source_dim, degree);
    if (control.size() != indices.size())
        fail(ErrorKind::invalid_argument, "wrong number of Bernstein control points");
    for (auto& p : control)
        for (auto& c : p) c.canonicalize();
    PolyMap phi;
    phi.source_dim_ = source_dim;
    phi.target_dim_ = target_dim;
    phi.degree_ = degree;
    phi.coords_.assign(target_dim, Poly(source_dim));
    std::vector<Poly> t;
    for (int j = 0; j <= source_dim; ++j) t.push_back(barycentric(source_dim, j));
    for (std::size_t a = 0; a < indices.size(); ++a) {
        if (static_cast<int>(control[a].size()) != target_dim)
            fail(ErrorKind::invalid_argument, "control point has the wrong dimension");
        mpz_class denom = 1;
        Poly basis = Poly::constant(source_dim, Scalar(1));
        for (int j = 0; j <= source_dim; ++j) {
            denom *= factorial(indices[a][j]);
            if (indices[a][j]) basis = basis * t[j].pow(indices[a][j]);
        }
        basis *= Scalar(ratio(factorial(degree), denom));
        for (int c = 0; c < target_dim; ++c)
            if (control[a][c] != 0) phi.coords_[c] += basis * Scalar(control[a][c]);
    }
    phi.control_ = std::move(control);
    return phi;
}

PolyMap PolyMap::affine(int source_dim, int target_dim, const std::vector<int>& vertex_images) {
    if (static_cast<int>(vertex_images.size()) != source_dim + 1)
        fail(ErrorKind::invalid_argument, "affine map needs one image per source vertex");
    std::vector<std::vector<Rational>> control;
    for (int v : vertex_images) {
        if (v < 0 || v > target_dim) fail(ErrorKind::invalid_argument, "vertex image out of range");
        std::vector<Rational> p(target_dim);
        if (v > 0) p[v - 1] = 1;
        control.push_back(std::move(p));
    }
    return bernstein(source_dim, target_dim, 1, std::move(control));
}

PolyMap PolyMap::from_ordinal(const OrdinalMap& op, int target_dim) {
    return affine(static_cast<int>(op.size()) - 1, target_dim, op);
}

PolyMap PolyMap::identity(int d) { return from_ordinal(identity_map(d), d); }

bool PolyMap::control_points_valid() const {
    for (const auto& p : control_) {
        Rational sum = 0;
        for (const auto& c : p) {
            if (c < 0) return false;
            sum += c;
        }
        if (sum > 1) return false;
    }
    return true;
}

std::vector<double> PolyMap::evaluate(std::span<const double> point) const {
    std::vector<double> out;
    for (const auto& c : coords_) out.push_back(c.evaluate(point).real());
    return out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    if (outer.source_dim() != inner.target_dim()) fail(ErrorKind::invalid_argument, "polynomial maps do not compose");
    std::vector<Poly> coords;
    for (const auto& c : outer.coordinates()) coords.push_back(c.compose(inner.coordinates()));
    const int degree = std::max(1, outer.bernstein_degree() * inner.bernstein_degree());
    return PolyMap::bernstein(inner.source_dim(), outer.target_dim(), degree,
                              to_bernstein(coords, inner.source_dim(), degree));
}

Poly pullback(const Poly& f, const PolyMap& phi) {
    if (f.nvars() != phi.target_dim()) fail(ErrorKind::invalid_argument, "pullback dimension mismatch");
    if (phi.target_dim() == 0) return f.with_nvars(phi.source_dim());
    return f.compose(phi.coordinates());
}

PolyForm pullback_form(const PolyForm& w, const PolyMap& phi) {
    if (w.dim() != phi.target_dim())
        fail(ErrorKind::invalid_argument, "pullback: form lives on Delta^" + std::to_string(w.dim()) +
                                              " but map targets Delta^" + std::to_string(phi.target_dim()));
    const int k = phi.source_dim();
    if (w.degree() > k) return PolyForm(k, w.degree());
    PolyForm r(k, w.degree());
    std::vector<PolyForm> dphi;
    for (const auto& c : phi.coordinates()) dphi.push_back(d_form(PolyForm::function(c)));
    std::map<IndexMask, PolyForm> frames;
    for (const auto& [m, f] : w.components()) {
        auto it = frames.find(m);
        if (it == frames.end()) {
            PolyForm frame = PolyForm::function(Poly::constant(k, Scalar(1)));
            for (int v : mask_indices(m)) frame = wedge(frame, dphi[v]);
            it = frames.emplace(m, std::move(frame)).first;
        }
        if (it->second.is_zero()) continue;
        r += pullback(f, phi) * it->second;
    }
    return r;
}

PolyForm pullback_form(const PolyForm& w, const OrdinalMap& op) {
    if (op == identity_map(w.dim())) return w;
    return pullback_form(w, PolyMap::from_ordinal(op, w.dim()));
}

}  // namespace scw
