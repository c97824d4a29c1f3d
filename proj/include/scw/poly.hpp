#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scw/scalar.hpp"

namespace scw {

inline constexpr int kMaxVars = 16;

using Exponents = std::array<std::uint8_t, kMaxVars>;

/// Canonical order: lexicographically larger exponent vectors first, so
/// x1^2 < x1*x2 < x1 < x2 < 1 in printing order.
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

/// Multivariate polynomial in x1..xn with Scalar coefficients.
class Poly {
public:
    using TermMap = std::map<Exponents, Scalar, MonomialOrder>;

    explicit Poly(int nvars = 0);

    static Poly constant(int nvars, const Scalar& c);
    /// The coordinate x_{v+1} (v is zero-based).
    static Poly variable(int nvars, int v);
    static Poly monomial(int nvars, const Exponents& e, const Scalar& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_exact() const;
    int degree() const;
    bool is_homogeneous(int k) const;
    const TermMap& terms() const { return terms_; }
    Scalar constant_term() const;
    Scalar coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Scalar& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly derivative(int v) const;
    Poly pow(int e) const;

    /// Substitute subs[v] for x_{v+1}; all substitutes share one variable count.
    Poly compose(std::span<const Poly> subs) const;

    Scalar evaluate(std::span<const Scalar> point) const;
    std::complex<double> evaluate(std::span<const double> point) const;

    Poly to_float() const;
    /// Re-embed into `nvars` variables (must not drop a used variable).
    Poly with_nvars(int nvars) const;

    std::string to_string() const;
    static Poly parse(std::string_view text, int nvars);

private:
    int nvars_;
    TermMap terms_;
};

int total_degree(const Exponents& e);

}  // namespace scw
