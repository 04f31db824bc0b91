#ifndef ASKEYVS_POLY_HPP
#define ASKEYVS_POLY_HPP

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace askeyvs {

namespace detail {

template <class T>
bool zero_test(const T& v)
{
    return is_zero(v);
}

} // namespace detail

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial over a field F, coefficient i multiplies var^i.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient list and degree kZeroDegree. Constants carry a variable
/// label too, but are allowed to mix with any variable.
template <class F>
class Poly {
public:
    explicit Poly(char var = 'x') : var_(var) {}
    Poly(std::vector<F> coeffs, char var = 'x') : coeffs_(std::move(coeffs)), var_(var) { trim(); }

    static Poly constant(F c, char var = 'x') { return Poly(std::vector<F>{std::move(c)}, var); }
    static Poly monomial(F c, int degree, char var = 'x')
    {
        std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
        v.back() = std::move(c);
        return Poly(std::move(v), var);
    }
    /// The polynomial var - root.
    static Poly linear(const F& root, char var = 'x') { return Poly(std::vector<F>{-root, F(1)}, var); }

    char var() const noexcept { return var_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<F>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of var^i; zero past the degree.
    F coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : F(0); }
    const F& leading() const
    {
        if (is_zero())
            throw Error(Errc::InvalidSpec, "leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    template <class T>
    T operator()(const T& at) const
    {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) { return accumulate(o, 1); }
    Poly& operator-=(const Poly& o) { return accumulate(o, -1); }

    Poly& operator*=(const F& s)
    {
        if (detail::zero_test(s)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_)
            c = c * s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        char v = unify(a, b);
        if (a.is_zero() || b.is_zero())
            return Poly(v);
        std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::zero_test(a.coeffs_[i]))
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out), v);
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.coeffs_.size() != b.coeffs_.size())
            return false;
        if (a.degree() >= 1 && a.var_ != b.var_)
            return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i]))
                return false;
        return true;
    }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg d.
    friend std::pair<Poly, Poly> divmod(const Poly& n, const Poly& d)
    {
        char v = unify(n, d);
        if (d.is_zero())
            throw Error(Errc::DivisionByZero, "polynomial division by zero");
        Poly rem = n;
        rem.var_ = v;
        Poly quot(v);
        if (n.degree() < d.degree())
            return {quot, rem};
        quot.coeffs_.assign(static_cast<std::size_t>(n.degree() - d.degree()) + 1, F(0));
        const F lead_inv = F(1) / d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            F factor = rem.leading() * lead_inv;
            quot.coeffs_[static_cast<std::size_t>(shift)] = factor;
            for (int i = 0; i <= d.degree(); ++i) {
                auto& c = rem.coeffs_[static_cast<std::size_t>(i + shift)];
                c = c - factor * d.coeffs_[static_cast<std::size_t>(i)];
            }
            // The leading term cancels exactly.
            rem.coeffs_.pop_back();
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }

    Poly monic() const
    {
        if (is_zero())
            return *this;
        return *this * (F(1) / leading());
    }

private:
    static char unify(const Poly& a, const Poly& b)
    {
        if (a.degree() >= 1 && b.degree() >= 1 && a.var_ != b.var_)
            throw Error(Errc::VariableMismatch,
                        std::string("variables '") + a.var_ + "' and '" + b.var_ + "' differ");
        return a.degree() >= 1 ? a.var_ : b.var_;
    }

    Poly& accumulate(const Poly& o, int sign)
    {
        var_ = unify(*this, o);
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = sign > 0 ? coeffs_[i] + o.coeffs_[i] : coeffs_[i] - o.coeffs_[i];
        trim();
        return *this;
    }

    void trim()
    {
        while (!coeffs_.empty() && detail::zero_test(coeffs_.back()))
            coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
    char var_;
};

template <class F>
bool is_zero(const Poly<F>& p) noexcept
{
    return p.is_zero();
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Human-readable form, e.g. "x^2 - 3x + 1" or "(1+2*i)x - 1/2".
template <class F>
std::string to_string(const Poly<F>& p)
{
    using askeyvs::to_string;
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const F c = p.coeff(i);
        if (is_zero(c))
            continue;
        std::string cs = to_string(c);
        bool negative_real = false;
        if constexpr (std::is_same_v<F, Scalar>)
            negative_real = c.is_real() && sgn(c.re()) < 0;
        std::string body;
        if (negative_real)
            cs = to_string(F(-c));
        bool is_compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('*') != std::string::npos;
        std::string mono;
        if (i >= 1)
            mono = std::string(1, p.var()) + (i > 1 ? "^" + std::to_string(i) : "");
        if (i == 0)
            body = cs;
        else if (cs == "1")
            body = mono;
        else if (is_compound)
            body = "(" + cs + ")" + mono;
        else
            body = cs + mono;
        if (out.empty())
            out = negative_real ? "-" + body : body;
        else
            out += negative_real ? " - " + body : " + " + body;
    }
    return out;
}

} // namespace askeyvs

#endif
