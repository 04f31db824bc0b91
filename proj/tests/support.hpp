#ifndef ASKEYVS_TESTS_SUPPORT_HPP
#define ASKEYVS_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "askeyvs/scalar.hpp"
#include "askeyvs/spectral.hpp"

namespace testing_support {

using askeyvs::Scalar;

inline Scalar S(const char* text) { return Scalar::parse(text); }
inline Scalar S(long v) { return Scalar(v); }

inline Scalar random_rational(std::mt19937& rng, long span = 9)
{
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    return Scalar::ratio(num(rng), den(rng));
}

inline Scalar random_gaussian(std::mt19937& rng, long span = 9)
{
    return random_rational(rng, span) + random_rational(rng, span) * Scalar::i();
}

inline Scalar random_nonzero(std::mt19937& rng, long span = 9)
{
    for (;;) {
        Scalar v = random_gaussian(rng, span);
        if (!v.is_zero())
            return v;
    }
}

/// Evaluated triple from closures, k = 0..K.
template <class H, class X, class G>
askeyvs::TripleData<Scalar> make_triple(int K, H h, X x, G g)
{
    std::vector<Scalar> hs, xs, gs;
    for (int k = 0; k <= K; ++k) {
        hs.push_back(h(Scalar(k)));
        xs.push_back(x(Scalar(k)));
        gs.push_back(k == 0 ? Scalar(0) : g(Scalar(k)));
    }
    return askeyvs::TripleData<Scalar>(hs, xs, gs);
}

/// Charlier data h_k = -k/a, x_k = k, g_k = k.
inline askeyvs::TripleData<Scalar> charlier_triple(const Scalar& a, int K = 10)
{
    return make_triple(
        K, [&](const Scalar& k) { return -k / a; }, [](const Scalar& k) { return k; },
        [](const Scalar& k) { return k; });
}

/// Wilson data h_k = -k(k+a+b+c+d-1), x_k = -(k+a)^2, g_k = k(k+a+b-1)(k+a+c-1)(k+a+d-1).
inline askeyvs::TripleData<Scalar> wilson_triple(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                                                 int K = 10)
{
    const Scalar one(1);
    return make_triple(
        K, [&](const Scalar& k) { return -k * (k + a + b + c + d - one); },
        [&](const Scalar& k) { return -(k + a) * (k + a); },
        [&](const Scalar& k) { return k * (k + a + b - one) * (k + a + c - one) * (k + a + d - one); });
}

/// Binomial data h_k = -k, x_k = 0, g_k = k.
inline askeyvs::TripleData<Scalar> binomial_triple(int K = 10)
{
    return make_triple(
        K, [](const Scalar& k) { return -k; }, [](const Scalar&) { return Scalar(0); },
        [](const Scalar& k) { return k; });
}

/// Direct sum of a terminating pFq written with explicit rising factorials.
inline Scalar series(const std::vector<Scalar>& up, const std::vector<Scalar>& lo, const Scalar& z, int n)
{
    Scalar total(0);
    for (int k = 0; k <= n; ++k) {
        Scalar term(1);
        for (int j = 0; j < k; ++j) {
            for (const auto& a : up)
                term *= a + Scalar(j);
            for (const auto& b : lo)
                term /= b + Scalar(j);
            term /= Scalar(j + 1);
            term *= z;
        }
        total += term;
    }
    return total;
}

} // namespace testing_support

#endif
