#ifndef ASKEYVS_SCALAR_HPP
#define ASKEYVS_SCALAR_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "error.hpp"

namespace askeyvs {

/// Arbitrary precision rational (always kept canonical by GMP).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw Error(Errc::DivisionByZero, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Exact Gaussian rational re + im*i.
///
/// Both parts are GMP rationals in canonical form, so equality is structural.
/// This is the ground field for every computation in the library.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}
    Scalar(long v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar ratio(long num, long den) { return Scalar(make_rational(num, den)); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_integer() const { return is_real() && re_.get_den() == 1; }

    /// Value as a long when the scalar is an integer that fits.
    std::optional<long> to_long() const
    {
        if (!is_integer() || !re_.get_num().fits_slong_p())
            return std::nullopt;
        return re_.get_num().get_si();
    }

    Scalar conj() const { return Scalar(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const
    {
        Rational n = norm();
        if (sgn(n) == 0)
            throw Error(Errc::DivisionByZero, "inverse of zero");
        return Scalar(re_ / n, -im_ / n);
    }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o)
    {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o)
    {
        if (o.is_zero())
            throw Error(Errc::DivisionByZero, "division by zero");
        if (o.is_real()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// "p/q", "r/s*i" or "p/q+r/s*i"; integers print without a denominator.
    std::string to_string() const
    {
        if (is_real())
            return re_.get_str();
        std::string imag;
        if (im_ == 1)
            imag = "i";
        else if (im_ == -1)
            imag = "-i";
        else
            imag = im_.get_str() + "*i";
        if (sgn(re_) == 0)
            return imag;
        if (imag.front() == '-')
            return re_.get_str() + imag;
        return re_.get_str() + "+" + imag;
    }

    /// Parses exact literals: "3", "-2/7", "i", "-i", "2/3*i", "2/3 i",
    /// "1/2+3/4*i", "1/2 - i". Decimal points are rejected.
    static Scalar parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    Rational re_{0};
    Rational im_{0};
};

inline bool is_zero(const Scalar& s) noexcept { return s.is_zero(); }
inline std::string to_string(const Scalar& s) { return s.to_string(); }

/// Integer power, negative exponents invert.
template <class F>
F ipow(F base, long e)
{
    if (e < 0) {
        base = F(1) / base;
        e = -e;
    }
    F result(1);
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

namespace detail {

inline Rational parse_rational(std::string_view s, std::string_view whole)
{
    auto bad = [&](const char* why) {
        return Error(Errc::ParseError, std::string(why) + " in literal '" + std::string(whole) + "'");
    };
    if (s.empty())
        throw bad("empty number");
    std::size_t slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    auto digits_only = [](std::string_view d) {
        if (d.empty())
            return false;
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    if (!digits_only(num) || !digits_only(den))
        throw bad(s.find('.') != std::string_view::npos ? "decimal literals are not exact" : "malformed rational");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0)
        throw Error(Errc::DivisionByZero, "zero denominator in literal '" + std::string(whole) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace detail

inline Scalar Scalar::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw Error(Errc::ParseError, "empty scalar literal");

    // Split into signed terms at '+'/'-' that are not leading.
    Rational re(0), im(0);
    bool saw_re = false, saw_im = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = s.find_first_of("+-", pos);
        std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end;
        if (term.empty())
            throw Error(Errc::ParseError, "dangling sign in literal '" + s + "'");
        if (term.back() == 'i') {
            term.remove_suffix(1);
            if (!term.empty() && term.back() == '*')
                term.remove_suffix(1);
            Rational v = term.empty() ? Rational(1) : detail::parse_rational(term, s);
            if (saw_im)
                throw Error(Errc::ParseError, "two imaginary parts in literal '" + s + "'");
            saw_im = true;
            im = Rational(sign * v);
        } else {
            if (saw_re)
                throw Error(Errc::ParseError, "two real parts in literal '" + s + "'");
            saw_re = true;
            re = Rational(sign * detail::parse_rational(term, s));
        }
    }
    return Scalar(re, im);
}

} // namespace askeyvs

#endif
