#include "scw/poly.hpp"

#include <cctype>
#include <cmath>

#include "scw/error.hpp"

namespace scw {

int total_degree(const Exponents& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars)
        fail(ErrorKind::invalid_argument, "polynomial variable count out of range: " + std::to_string(nvars));
}

Poly Poly::constant(int nvars, const Scalar& c) {
    Poly p(nvars);
    p.add_term(Exponents{}, c);
    return p;
}

Poly Poly::variable(int nvars, int v) {
    if (v < 0 || v >= nvars) fail(ErrorKind::invalid_argument, "variable index out of range");
    Exponents e{};
    e[v] = 1;
    return monomial(nvars, e, Scalar(1));
}

Poly Poly::monomial(int nvars, const Exponents& e, const Scalar& c) {
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Poly::is_exact() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_exact()) return false;
    return true;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Poly::is_homogeneous(int k) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != k) return false;
    return true;
}

Scalar Poly::constant_term() const { return coefficient(Exponents{}); }

Scalar Poly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.nvars_ != nvars_) fail(ErrorKind::invalid_argument, "polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.nvars_ != nvars_) fail(ErrorKind::invalid_argument, "polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) fail(ErrorKind::invalid_argument, "polynomial variable counts differ");
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int v = 0; v < kMaxVars; ++v) e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::derivative(int v) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents f = e;
        --f[v];
        r.add_term(f, c * Scalar(static_cast<int>(e[v])));
    }
    return r;
}

Poly Poly::pow(int e) const {
    Poly r = constant(nvars_, Scalar(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Poly Poly::compose(std::span<const Poly> subs) const {
    if (static_cast<int>(subs.size()) != nvars_)
        fail(ErrorKind::invalid_argument, "composition needs one substitute per variable");
    const int out_vars = subs.empty() ? 0 : subs[0].nvars();
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power_of = [&](int v, int k) -> const Poly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(constant(out_vars, Scalar(1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * subs[v]);
        return cache[k];
    };
    Poly r(out_vars);
    for (const auto& [e, c] : terms_) {
        Poly term = constant(out_vars, c);
        for (int v = 0; v < nvars_; ++v)
            if (e[v]) term = term * power_of(v, e[v]);
        r += term;
    }
    return r;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < e[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

std::complex<double> Poly::evaluate(std::span<const double> point) const {
    std::complex<double> acc{};
    for (const auto& [e, c] : terms_) {
        double m = 1.0;
        for (int v = 0; v < nvars_; ++v)
            if (e[v]) m *= std::pow(point[v], e[v]);
        acc += c.to_complex() * m;
    }
    return acc;
}

Poly Poly::to_float() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.to_float());
    return r;
}

Poly Poly::with_nvars(int nvars) const {
    Poly r(nvars);
    for (const auto& [e, c] : terms_) {
        for (int v = nvars; v < kMaxVars; ++v)
            if (e[v]) fail(ErrorKind::invalid_argument, "cannot drop a variable in use");
        r.terms_.emplace(e, c);
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (int v = 0; v < nvars_; ++v) {
            if (!e[v]) continue;
            out += "*x" + std::to_string(v + 1);
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
        }
    }
    return out;
}

Poly Poly::parse(std::string_view text, int nvars) {
    Poly p(nvars);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "0") return p;
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (!first) {
            if (text[pos] != '+') throw ParseError(0, "expected '+' between polynomial terms");
            ++pos;
            skip_ws();
        }
        first = false;
        if (pos >= text.size() || text[pos] != '(') throw ParseError(0, "expected '(' opening a coefficient");
        const auto close = text.find(')', pos);
        if (close == std::string_view::npos) throw ParseError(0, "unterminated coefficient");
        Scalar c = Scalar::parse(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        Exponents e{};
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            if (pos >= text.size() || text[pos] != 'x') throw ParseError(0, "expected variable name");
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw ParseError(0, "expected variable index");
            const int v = std::stoi(std::string(text.substr(start, pos - start))) - 1;
            if (v < 0 || v >= nvars) throw ParseError(0, "variable index out of range");
            int k = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) throw ParseError(0, "expected exponent");
                k = std::stoi(std::string(text.substr(start, pos - start)));
            }
            e[v] = static_cast<std::uint8_t>(e[v] + k);
        }
        p.add_term(e, c);
    }
    return p;
}

}  // namespace scw
