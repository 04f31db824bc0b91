#ifndef ASKEYVS_HYPERGEOMETRIC_HPP
#define ASKEYVS_HYPERGEOMETRIC_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace askeyvs {

/// (a)_k = a (a+1) ... (a+k-1).
template <class F>
F pochhammer(const F& a, int k)
{
    F r(1);
    for (int j = 0; j < k; ++j)
        r = r * (a + F(j));
    return r;
}

/// (a; q)_k = (1 - a)(1 - a q) ... (1 - a q^{k-1}).
template <class F>
F q_pochhammer(const F& a, const F& q, int k)
{
    F r(1), qj(1);
    for (int j = 0; j < k; ++j) {
        r = r * (F(1) - a * qj);
        qj = qj * q;
    }
    return r;
}

/// Terminating pFq(upper; lower; z), summed for k = 0..terms-1 term by term
/// as a ratio of Pochhammer products (never through a recursion on terms).
/// A lower parameter hitting (b)_k = 0 inside the range is an error.
template <class F>
F hypergeometric_pFq(const std::vector<F>& upper, const std::vector<F>& lower, const F& z, int terms)
{
    F sum(0);
    for (int k = 0; k < terms; ++k) {
        F num(1), den(1);
        for (const F& a : upper)
            num = num * pochhammer(a, k);
        if (detail::zero_test(num))
            continue;
        for (const F& b : lower)
            den = den * pochhammer(b, k);
        den = den * pochhammer(F(1), k);
        if (detail::zero_test(den))
            throw Error(Errc::DivisionByZero, "lower parameter gives (b)_" + std::to_string(k) + " = 0");
        sum = sum + num / den * ipow(z, k);
    }
    return sum;
}

/// Terminating basic series rphis(upper; lower; q, z) with the extra factor
/// ((-1)^k q^{k(k-1)/2})^{1+s-r}.
template <class F>
F basic_hypergeometric(const std::vector<F>& upper, const std::vector<F>& lower, const F& q, const F& z, int terms)
{
    const long r = static_cast<long>(upper.size()), s = static_cast<long>(lower.size());
    const long extra = 1 + s - r;
    F sum(0);
    for (int k = 0; k < terms; ++k) {
        F num(1), den(1);
        for (const F& a : upper)
            num = num * q_pochhammer(a, q, k);
        if (detail::zero_test(num))
            continue;
        for (const F& b : lower)
            den = den * q_pochhammer(b, q, k);
        den = den * q_pochhammer(q, q, k);
        if (detail::zero_test(den))
            throw Error(Errc::DivisionByZero, "lower parameter gives (b;q)_" + std::to_string(k) + " = 0");
        F term = num / den * ipow(z, k);
        if (extra != 0) {
            F f = ipow(q, static_cast<long>(k) * (k - 1) / 2);
            if (k % 2 == 1)
                f = F(0) - f;
            term = term * ipow(f, extra);
        }
        sum = sum + term;
    }
    return sum;
}

} // namespace askeyvs

#endif
