#include "scw/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "scw/error.hpp"

namespace scw {

namespace {

Scalar::Term make_term(int power, const Rational& re, const Rational& im) {
    Scalar::Term t;
    t.tau_power = power;
    t.re = re;
    t.im = im;
    t.re.canonicalize();
    t.im.canonicalize();
    return t;
}

}  // namespace

Scalar::Scalar(int v) : Scalar(Rational(v)) {}
Scalar::Scalar(long v) : Scalar(Rational(v)) {}

Scalar::Scalar(const Rational& v) {
    if (v != 0) terms_.push_back(make_term(0, v, 0));
}

Scalar Scalar::gaussian(const Rational& re, const Rational& im, int tau_power) {
    Scalar s;
    if (re != 0 || im != 0) s.terms_.push_back(make_term(tau_power, re, im));
    return s;
}

Scalar Scalar::tau(int power) { return gaussian(1, 0, power); }
Scalar Scalar::imag_unit() { return gaussian(0, 1, 0); }

Scalar Scalar::from_complex(std::complex<double> v) {
    Scalar s;
    s.is_float_ = true;
    s.float_value_ = v;
    return s;
}

bool Scalar::is_zero() const {
    if (is_float_) return float_value_ == std::complex<double>{};
    return terms_.empty();
}

bool Scalar::is_one() const {
    if (is_float_) return float_value_ == std::complex<double>{1.0, 0.0};
    return terms_.size() == 1 && terms_[0].tau_power == 0 && terms_[0].re == 1 && terms_[0].im == 0;
}

std::optional<Rational> Scalar::as_rational() const {
    if (is_float_) return std::nullopt;
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].tau_power == 0 && terms_[0].im == 0) return terms_[0].re;
    return std::nullopt;
}

std::complex<double> Scalar::to_complex() const {
    if (is_float_) return float_value_;
    std::complex<double> acc{};
    for (const auto& t : terms_) {
        const double scale = std::pow(kTau, t.tau_power);
        acc += std::complex<double>(t.re.get_d(), t.im.get_d()) * scale;
    }
    return acc;
}

Scalar Scalar::to_float() const { return from_complex(to_complex()); }

Scalar Scalar::inverse() const {
    if (is_float_) return from_complex(1.0 / float_value_);
    if (terms_.size() != 1)
        fail(ErrorKind::invalid_argument, "exact scalar " + to_string() + " is not an invertible monomial");
    const Term& t = terms_[0];
    Rational norm = t.re * t.re + t.im * t.im;
    return gaussian(t.re / norm, -t.im / norm, -t.tau_power);
}

Scalar Scalar::conj() const {
    if (is_float_) return from_complex(std::conj(float_value_));
    Scalar r = *this;
    for (auto& t : r.terms_) t.im = -t.im;
    return r;
}

void Scalar::prune() {
    std::erase_if(terms_, [](const Term& t) { return t.re == 0 && t.im == 0; });
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_float_ || o.is_float_) {
        *this = from_complex(to_complex() + o.to_complex());
        return *this;
    }
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->tau_power < b->tau_power)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->tau_power < a->tau_power) {
            out.push_back(*b++);
        } else {
            Term t = std::move(*a++);
            t.re += b->re;
            t.im += b->im;
            ++b;
            if (t.re != 0 || t.im != 0) out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
    if (is_float_) return from_complex(-float_value_);
    Scalar r = *this;
    for (auto& t : r.terms_) {
        t.re = -t.re;
        t.im = -t.im;
    }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_float_ || o.is_float_) {
        *this = from_complex(to_complex() * o.to_complex());
        return *this;
    }
    if (terms_.empty()) return *this;
    if (o.terms_.empty()) {
        terms_.clear();
        return *this;
    }
    if (terms_.size() == 1 && o.terms_.size() == 1) {
        Term& t = terms_[0];
        const Term& u = o.terms_[0];
        Rational re = t.re * u.re - t.im * u.im;
        Rational im = t.re * u.im + t.im * u.re;
        t.re = std::move(re);
        t.im = std::move(im);
        t.tau_power += u.tau_power;
        prune();
        return *this;
    }
    Scalar acc;
    for (const auto& t : terms_) {
        for (const auto& u : o.terms_) {
            acc += gaussian(t.re * u.re - t.im * u.im, t.re * u.im + t.im * u.re,
                            t.tau_power + u.tau_power);
        }
    }
    *this = std::move(acc);
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_float_ || b.is_float_) return a.to_complex() == b.to_complex();
    return a.terms_ == b.terms_;
}

bool Scalar::near(const Scalar& o, double tol) const {
    if (!is_float_ && !o.is_float_) return *this == o;
    return std::abs(to_complex() - o.to_complex()) <= tol;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw ParseError(0, "malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

std::string Scalar::to_string() const {
    if (is_float_) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "{%a,%a}", float_value_.real(), float_value_.imag());
        return buf;
    }
    if (terms_.empty()) return "0";
    std::string out;
    auto emit = [&](const Rational& c, bool imaginary, int power) {
        const bool negative = c < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += rational_to_string(negative ? Rational(-c) : c);
        if (imaginary) out += "i";
        if (power == 1)
            out += "*tau";
        else if (power != 0)
            out += "*tau^" + std::to_string(power);
    };
    for (const auto& t : terms_) {
        if (t.re != 0) emit(t.re, false, t.tau_power);
        if (t.im != 0) emit(t.im, true, t.tau_power);
    }
    return out;
}

Scalar Scalar::parse(std::string_view text) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (text.empty()) throw ParseError(0, "empty scalar");
    if (text.front() == '{') {
        if (text.back() != '}') throw ParseError(0, "unterminated float scalar");
        std::string body(text.substr(1, text.size() - 2));
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw ParseError(0, "float scalar needs re,im");
        char* end = nullptr;
        const double re = std::strtod(body.c_str(), &end);
        if (end != body.c_str() + comma) throw ParseError(0, "bad float real part");
        const char* im_begin = body.c_str() + comma + 1;
        const double im = std::strtod(im_begin, &end);
        if (end != body.c_str() + body.size()) throw ParseError(0, "bad float imaginary part");
        return from_complex({re, im});
    }

    Scalar acc;
    std::size_t pos = 0;
    bool first = true;
    auto skip_ws = [&] {
        while (pos < text.size() && is_space(text[pos])) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError(0, "expected '+' or '-' in scalar '" + std::string(text) + "'");
        }
        first = false;
        const std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos == start) throw ParseError(0, "expected digits in scalar '" + std::string(text) + "'");
        Rational c = parse_rational(text.substr(start, pos - start));
        if (negative) c = -c;
        bool imaginary = false;
        if (pos < text.size() && text[pos] == 'i') {
            imaginary = true;
            ++pos;
        }
        int power = 0;
        if (text.substr(pos, 4) == "*tau") {
            pos += 4;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                const std::size_t pstart = pos;
                if (pos < text.size() && text[pos] == '-') ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == pstart) throw ParseError(0, "bad tau exponent");
                power = std::stoi(std::string(text.substr(pstart, pos - pstart)));
            }
        }
        acc += imaginary ? gaussian(0, c, power) : gaussian(c, 0, power);
    }
    return acc;
}

}  // namespace scw
