#ifndef ASKEYVS_RATFUN_HPP
#define ASKEYVS_RATFUN_HPP

#include <string>
#include <utility>

#include "error.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace askeyvs {

using DenseUniPoly = Poly<Scalar>;

/// Reduced rational function num/den over the Gaussian rationals.
///
/// Invariant: gcd(num, den) = 1 and den is monic, so two RatFun values are
/// equal exactly when their stored numerators and denominators agree.
class RatFun {
public:
    RatFun() : RatFun(Scalar(0)) {}
    RatFun(int c) : RatFun(Scalar(c)) {}
    RatFun(const Scalar& c, char var = 's') : num_(DenseUniPoly::constant(c, var)), den_(DenseUniPoly::constant(1, var)) {}

    /// Reduces num/den; throws ZeroDenominator for den = 0.
    static RatFun reduce(DenseUniPoly num, DenseUniPoly den)
    {
        if (den.is_zero())
            throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
        RatFun r;
        char v = den.degree() >= 1 ? den.var() : num.var();
        if (num.is_zero()) {
            r.num_ = DenseUniPoly(v);
            r.den_ = DenseUniPoly::constant(1, v);
            return r;
        }
        if (num.degree() >= 1 && den.degree() >= 1) {
            DenseUniPoly g = gcd(num, den);
            if (g.degree() >= 1) {
                num = divmod(num, g).first;
                den = divmod(den, g).first;
            }
        }
        Scalar lead_inv = Scalar(1) / den.leading();
        r.num_ = num * lead_inv;
        r.den_ = den * lead_inv;
        return r;
    }

    static RatFun from_poly(DenseUniPoly p) { return reduce(std::move(p), DenseUniPoly::constant(1, p.var())); }

    /// The variable itself, e.g. s.
    static RatFun variable(char var = 's') { return from_poly(DenseUniPoly::monomial(1, 1, var)); }

    const DenseUniPoly& num() const noexcept { return num_; }
    const DenseUniPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Value of the reduced function; PoleAtPoint when the reduced denominator vanishes.
    Scalar operator()(const Scalar& at) const
    {
        Scalar d = den_(at);
        if (d.is_zero())
            throw Error(Errc::PoleAtPoint, "denominator vanishes at " + at.to_string());
        return num_(at) / d;
    }

    RatFun operator-() const
    {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b)
    {
        if (a.den_ == b.den_)
            return reduce(a.num_ + b.num_, a.den_);
        return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b)
    {
        if (a.is_zero() || b.is_zero())
            return RatFun();
        if (a.den_.degree() == 0 && b.den_.degree() == 0)
            return reduce(a.num_ * b.num_, a.den_ * b.den_);
        // Cross-cancel before multiplying to keep intermediate degrees small.
        RatFun x = reduce(a.num_, b.den_);
        RatFun y = reduce(b.num_, a.den_);
        return reduce(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b)
    {
        if (b.is_zero())
            throw Error(Errc::DivisionByZero, "division by the zero rational function");
        RatFun inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        return a * reduce(inv.num_, inv.den_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const
    {
        if (den_.degree() == 0)
            return askeyvs::to_string(num_);
        return "(" + askeyvs::to_string(num_) + ")/(" + askeyvs::to_string(den_) + ")";
    }

private:
    DenseUniPoly num_{'s'};
    DenseUniPoly den_{'s'};
};

inline bool is_zero(const RatFun& f) noexcept { return f.is_zero(); }
inline std::string to_string(const RatFun& f) { return f.to_string(); }

/// Free-function form of RatFun::reduce.
inline RatFun ratfun_reduce(DenseUniPoly num, DenseUniPoly den) { return RatFun::reduce(std::move(num), std::move(den)); }

/// Free-function form of RatFun evaluation.
inline Scalar ratfun_eval(const RatFun& f, const Scalar& at) { return f(at); }

} // namespace askeyvs

#endif
