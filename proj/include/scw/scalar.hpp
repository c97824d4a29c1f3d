#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace scw {

using Rational = mpq_class;

/// The value 2*pi substituted for the formal symbol tau on evaluation.
inline constexpr double kTau = 6.283185307179586476925286766559;

/// Coefficient ring of every form, cochain and Lie coordinate.
///
/// An exact scalar is a Laurent polynomial in the formal symbol tau (standing
/// for 2*pi) with Gaussian-rational coefficients, so Chern normalizations
/// divide out without rounding. A float scalar is a complex double. Any
/// arithmetic touching a float operand produces a float result.
class Scalar {
public:
    struct Term {
        int tau_power = 0;
        Rational re;
        Rational im;
        bool operator==(const Term&) const = default;
    };

    Scalar() = default;
    Scalar(int v);
    Scalar(long v);
    Scalar(const Rational& v);

    static Scalar gaussian(const Rational& re, const Rational& im, int tau_power = 0);
    static Scalar tau(int power = 1);
    static Scalar imag_unit();
    static Scalar from_complex(std::complex<double> v);
    static Scalar from_double(double v) { return from_complex({v, 0.0}); }

    bool is_exact() const { return !is_float_; }
    bool is_zero() const;
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }

    /// The tau-free rational value, if the scalar is exact and real with no tau.
    std::optional<Rational> as_rational() const;
    std::complex<double> to_complex() const;
    double real() const { return to_complex().real(); }
    Scalar to_float() const;

    /// Only monomials c*tau^e are invertible in exact mode.
    Scalar inverse() const;
    Scalar conj() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Exact structural equality; a float operand compares numerically and exactly.
    friend bool operator==(const Scalar& a, const Scalar& b);

    bool near(const Scalar& o, double tol) const;

    std::string to_string() const;
    static Scalar parse(std::string_view text);

private:
    void prune();

    bool is_float_ = false;
    std::complex<double> float_value_{};
    std::vector<Term> terms_;  // sorted by tau_power, no zero terms
};

std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace scw
