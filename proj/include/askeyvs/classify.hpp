#ifndef ASKEYVS_CLASSIFY_HPP
#define ASKEYVS_CLASSIFY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <initializer_list>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"
#include "spectral.hpp"

namespace askeyvs {

// ---------------------------------------------------------------------------
// Data triples in coefficient form
// ---------------------------------------------------------------------------

/// q = 1 data: h_k = a0 + a1 k + a2 k^2, x_k = b0 + b1 k + b2 k^2,
/// g_k = d1 k + d2 k^2 + d3 k^3 + d4 k^4.
struct SeqSpecQ1 {
    Scalar a0, a1, a2;
    Scalar b0, b1, b2;
    Scalar d1, d2, d3, d4;

    static constexpr std::array<std::string_view, 10> names{"a0", "a1", "a2", "b0", "b1",
                                                            "b2", "d1", "d2", "d3", "d4"};

    Scalar& coeff(std::string_view name)
    {
        std::array<Scalar*, 10> slots{&a0, &a1, &a2, &b0, &b1, &b2, &d1, &d2, &d3, &d4};
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return *slots[i];
        throw Error(Errc::InvalidSpec, "unknown q=1 coefficient '" + std::string(name) + "'");
    }
    const Scalar& coeff(std::string_view name) const { return const_cast<SeqSpecQ1*>(this)->coeff(name); }

    /// (a1, a2) != (0, 0) and some d_i != 0.
    void validate() const
    {
        if (a1.is_zero() && a2.is_zero())
            throw Error(Errc::InvalidSpec, "a1 or a2 must be nonzero (h_k would be constant)");
        if (d1.is_zero() && d2.is_zero() && d3.is_zero() && d4.is_zero())
            throw Error(Errc::InvalidSpec, "all d_i vanish (g_k = 0 for all k is excluded)");
    }

    Scalar h(const Scalar& k) const { return a0 + k * (a1 + k * a2); }
    Scalar x(const Scalar& k) const { return b0 + k * (b1 + k * b2); }
    Scalar g(const Scalar& k) const { return k * (d1 + k * (d2 + k * (d3 + k * d4))); }

    /// Evaluated sequences up to depth K; validates and checks h-distinctness.
    TripleData<Scalar> triple(int K) const
    {
        validate();
        std::vector<Scalar> h(K + 1), xs(K + 1), g(K + 1);
        for (int k = 0; k <= K; ++k) {
            h[k] = this->h(k);
            xs[k] = this->x(k);
            g[k] = this->g(k);
        }
        return TripleData<Scalar>(std::move(h), std::move(xs), std::move(g));
    }

    friend bool operator==(const SeqSpecQ1&, const SeqSpecQ1&) = default;
};

/// General q data: h_k = sum_{j=-1}^{1} a_j q^{jk}, x_k likewise with b_j,
/// g_k = sum_{j=-2}^{2} d_j q^{jk}, with sum d_j = 0.
struct SeqSpecQ {
    Scalar q{2};
    std::array<Scalar, 3> a{}; // a_{-1}, a_0, a_1
    std::array<Scalar, 3> b{}; // b_{-1}, b_0, b_1
    std::array<Scalar, 5> d{}; // d_{-2} .. d_2

    static constexpr std::array<std::string_view, 12> names{"q",   "a-1", "a0", "a1", "b-1", "b0",
                                                            "b1",  "d-2", "d-1", "d0", "d1", "d2"};

    Scalar& A(int j) { return a.at(static_cast<std::size_t>(j + 1)); }
    Scalar& B(int j) { return b.at(static_cast<std::size_t>(j + 1)); }
    Scalar& D(int j) { return d.at(static_cast<std::size_t>(j + 2)); }
    const Scalar& A(int j) const { return a.at(static_cast<std::size_t>(j + 1)); }
    const Scalar& B(int j) const { return b.at(static_cast<std::size_t>(j + 1)); }
    const Scalar& D(int j) const { return d.at(static_cast<std::size_t>(j + 2)); }

    Scalar& coeff(std::string_view name)
    {
        if (name == "q")
            return q;
        if (name.size() >= 2) {
            std::string_view idx = name.substr(1);
            int j = idx == "-2" ? -2 : idx == "-1" ? -1 : idx == "0" ? 0 : idx == "1" ? 1 : idx == "2" ? 2 : 99;
            if (name[0] == 'a' && j >= -1 && j <= 1)
                return A(j);
            if (name[0] == 'b' && j >= -1 && j <= 1)
                return B(j);
            if (name[0] == 'd' && j >= -2 && j <= 2)
                return D(j);
        }
        throw Error(Errc::InvalidSpec, "unknown q coefficient '" + std::string(name) + "'");
    }
    const Scalar& coeff(std::string_view name) const { return const_cast<SeqSpecQ*>(this)->coeff(name); }

    void validate() const
    {
        if (q.is_zero())
            throw Error(Errc::InvalidSpec, "q must be nonzero");
        Scalar sum;
        bool any = false;
        for (const auto& v : d) {
            sum += v;
            any = any || !v.is_zero();
        }
        if (!any)
            throw Error(Errc::InvalidSpec, "all d_i vanish (g_k = 0 for all k is excluded)");
        if (!sum.is_zero())
            throw Error(Errc::InvalidSpec, "sum of d_i must vanish, got " + sum.to_string());
    }

    Scalar h(int k) const { return A(-1) * ipow(q, -k) + A(0) + A(1) * ipow(q, k); }
    Scalar x(int k) const { return B(-1) * ipow(q, -k) + B(0) + B(1) * ipow(q, k); }
    Scalar g(int k) const
    {
        Scalar s;
        for (int j = -2; j <= 2; ++j)
            s += D(j) * ipow(q, static_cast<long>(j) * k);
        return s;
    }

    /// Evaluated sequences up to depth K. q must not be a root of unity of
    /// order <= K; h-distinctness is checked by TripleData.
    TripleData<Scalar> triple(int K) const
    {
        validate();
        Scalar qp(1);
        for (int j = 1; j <= K; ++j) {
            qp *= q;
            if (qp == Scalar(1))
                throw Error(Errc::InvalidSpec, "q^" + std::to_string(j) + " = 1");
        }
        std::vector<Scalar> h(K + 1), xs(K + 1), g(K + 1);
        for (int k = 0; k <= K; ++k) {
            h[k] = this->h(k);
            xs[k] = this->x(k);
            g[k] = this->g(k);
        }
        return TripleData<Scalar>(std::move(h), std::move(xs), std::move(g));
    }

    friend bool operator==(const SeqSpecQ&, const SeqSpecQ&) = default;
};

// ---------------------------------------------------------------------------
// Three-term recurrence constraints
// ---------------------------------------------------------------------------

/// The values (g_3, g_4) for which u_n satisfies a three-term recurrence,
/// given the first data values and the difference-equation parameter xi.
inline std::pair<Scalar, Scalar> general_constraints(const Scalar& h0, const Scalar& h1, const Scalar& h2,
                                                     const Scalar& x0, const Scalar& x1, const Scalar& x2,
                                                     const Scalar& g1, const Scalar& g2, const Scalar& xi)
{
    const Scalar X1 = x1 - x0, X2 = x2 - x0;
    const Scalar H1 = h1 - h0, H2 = h2 - h0;
    Scalar g3 = xi * (X2 * H2 - X1 * H2 - X2 * H1 + g2 - g1);
    Scalar g4 = xi * (xi - 1) * ((xi + 1) * (X1 * H1 - X1 * H2 - X2 * H1) + xi * X2 * H2 + g2) +
                (Scalar(1) - xi * xi) * g1;
    return {std::move(g3), std::move(g4)};
}

/// d3 = a1 b2 + a2 b1 - 2 a2 b2 and d4 = a2 b2.
inline bool check_q1_constraints(const SeqSpecQ1& s)
{
    return s.d3 == s.a1 * s.b2 + s.a2 * s.b1 - Scalar(2) * s.a2 * s.b2 && s.d4 == s.a2 * s.b2;
}

/// d_2 = a_1 b_1 / q, d_{-2} = q a_{-1} b_{-1}, and sum d_j = 0.
inline bool check_q_constraints(const SeqSpecQ& s)
{
    Scalar sum;
    for (const auto& v : s.d)
        sum += v;
    return sum.is_zero() && s.D(2) == s.A(1) * s.B(1) / s.q && s.D(-2) == s.q * s.A(-1) * s.B(-1);
}

// ---------------------------------------------------------------------------
// Degree and bidegree triples
// ---------------------------------------------------------------------------

struct DegreeTriple {
    int dx = 0;
    int dg = 1;
    int dh = 1;

    friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;

    std::string to_string() const
    {
        return "(" + std::to_string(dx) + "," + std::to_string(dg) + "," + std::to_string(dh) + ")";
    }
};

/// Rules 1-2 of the degree-triple scheme.
inline bool satisfies_degree_rules(const DegreeTriple& t)
{
    if (t.dx < 0 || t.dx > 2 || t.dg < 1 || t.dg > 4 || t.dh < 1 || t.dh > 2)
        return false;
    if (t.dx + t.dh >= 3)
        return t.dg == t.dx + t.dh;
    return t.dg <= 2;
}

inline DegreeTriple degree_triple(const SeqSpecQ1& s)
{
    auto highest = [](std::initializer_list<const Scalar*> coeffs, int first) {
        int deg = -1, i = first;
        for (const Scalar* c : coeffs) {
            if (!c->is_zero())
                deg = i;
            ++i;
        }
        return deg;
    };
    DegreeTriple t;
    t.dx = std::max(0, highest({&s.b0, &s.b1, &s.b2}, 0));
    t.dg = highest({&s.d1, &s.d2, &s.d3, &s.d4}, 1);
    t.dh = highest({&s.a1, &s.a2}, 1);
    if (!satisfies_degree_rules(t))
        throw Error(Errc::RuleViolation, "degree triple " + t.to_string() + " violates the degree rules");
    return t;
}

struct BidegreeTriple {
    int x_lo = 0, x_hi = 0;
    int g_lo = -1, g_hi = 0;
    int h_lo = -1, h_hi = 0;

    friend bool operator==(const BidegreeTriple&, const BidegreeTriple&) = default;

    bool is_valid() const
    {
        return x_hi >= 0 && x_hi <= 1 && x_lo >= -1 && x_lo <= 0 && h_hi >= 0 && h_hi <= 1 && h_lo >= -1 &&
               h_lo <= 0 && h_lo < h_hi && -2 <= g_lo && g_lo < g_hi && g_hi <= 2;
    }

    std::string to_string() const
    {
        auto s = [](int v) { return std::to_string(v); };
        return "(" + s(x_lo) + "," + s(x_hi) + ";" + s(g_lo) + "," + s(g_hi) + ";" + s(h_lo) + "," + s(h_hi) + ")";
    }
};

inline BidegreeTriple bidegree_triple(const SeqSpecQ& s)
{
    BidegreeTriple t;
    t.x_lo = s.B(-1).is_zero() ? 0 : -1;
    t.x_hi = s.B(1).is_zero() ? 0 : 1;
    t.h_lo = s.A(-1).is_zero() ? 0 : -1;
    t.h_hi = s.A(1).is_zero() ? 0 : 1;
    t.g_lo = 3;
    t.g_hi = -3;
    for (int j = -2; j <= 2; ++j)
        if (!s.D(j).is_zero()) {
            t.g_lo = std::min(t.g_lo, j);
            t.g_hi = std::max(t.g_hi, j);
        }
    if (!t.is_valid())
        throw Error(Errc::InvalidSpec, "bidegree triple " + t.to_string() + " is out of range");
    return t;
}

/// q <-> 1/q: each pair (lo, hi) becomes (-hi, -lo).
inline BidegreeTriple q_dual_bidegree(const BidegreeTriple& b)
{
    return {-b.x_hi, -b.x_lo, -b.g_hi, -b.g_lo, -b.h_hi, -b.h_lo};
}

/// Naive q -> 1 degree arithmetic deg = deg_+ - deg_-.
inline DegreeTriple degree_from_bidegree(const BidegreeTriple& b)
{
    return {b.x_hi - b.x_lo, b.g_hi - b.g_lo, b.h_hi - b.h_lo};
}

// ---------------------------------------------------------------------------
// Symmetries and the uniform four-parameter form
// ---------------------------------------------------------------------------

/// h -> rho h, g -> rho g.
inline SeqSpecQ1 dilate_h(SeqSpecQ1 s, const Scalar& rho)
{
    for (Scalar* c : {&s.a0, &s.a1, &s.a2, &s.d1, &s.d2, &s.d3, &s.d4})
        *c *= rho;
    return s;
}

/// h -> h + sigma.
inline SeqSpecQ1 translate_h(SeqSpecQ1 s, const Scalar& sigma)
{
    s.a0 += sigma;
    return s;
}

/// x -> rho x, g -> rho g.
inline SeqSpecQ1 dilate_x(SeqSpecQ1 s, const Scalar& rho)
{
    for (Scalar* c : {&s.b0, &s.b1, &s.b2, &s.d1, &s.d2, &s.d3, &s.d4})
        *c *= rho;
    return s;
}

/// x -> x + sigma.
inline SeqSpecQ1 translate_x(SeqSpecQ1 s, const Scalar& sigma)
{
    s.b0 += sigma;
    return s;
}

struct UniformParams {
    Scalar a2, b1, b2, d2;

    friend bool operator==(const UniformParams&, const UniformParams&) = default;
};

/// Normalized spec after the scalings that bring a0 = b0 = 0 and a1 = d1 = 1.
inline SeqSpecQ1 normalized_spec(const SeqSpecQ1& s)
{
    if (s.a1.is_zero())
        throw Error(Errc::NotNormalizable, "a1 = 0");
    if (s.d1.is_zero())
        throw Error(Errc::NotNormalizable, "d1 = 0");
    SeqSpecQ1 r = translate_x(translate_h(s, -s.a0), -s.b0);
    r = dilate_h(r, Scalar(1) / s.a1);
    // d1 is now d1/a1; the x-dilation brings it to 1.
    r = dilate_x(r, s.a1 / s.d1);
    return r;
}

inline UniformParams normalize_uniform(const SeqSpecQ1& s)
{
    SeqSpecQ1 n = normalized_spec(s);
    return {n.a2, n.b1, n.b2, n.d2};
}

/// The spec with a0 = b0 = 0, a1 = d1 = 1 and d3, d4 fixed by the constraints.
inline SeqSpecQ1 uniform_spec(const UniformParams& p)
{
    SeqSpecQ1 s;
    s.a1 = 1;
    s.a2 = p.a2;
    s.b1 = p.b1;
    s.b2 = p.b2;
    s.d1 = 1;
    s.d2 = p.d2;
    s.d3 = p.b2 + p.a2 * p.b1 - Scalar(2) * p.a2 * p.b2;
    s.d4 = p.a2 * p.b2;
    return s;
}

/// Terminating sum for U_n in the uniform parameters (a1 = d1 = 1):
/// sum_k (-n)_k/k! prod_{j<k} (a2(n+j)+1)(b2 j^2 + b1 j - x) / D(j+1),
/// D(m) = a2 b2 m^3 + (b2 + a2 b1 - 2 a2 b2) m^2 + d2 m + 1.
inline Scalar uniform_U(int n, const UniformParams& p, const Scalar& at)
{
    if (n < 0)
        throw Error(Errc::DepthExceeded, "uniform_U needs n >= 0");
    const Scalar c3 = p.a2 * p.b2;
    const Scalar c2 = p.b2 + p.a2 * p.b1 - Scalar(2) * p.a2 * p.b2;
    Scalar sum(1), term(1);
    for (int k = 1; k <= n; ++k) {
        const int j = k - 1;
        const Scalar m(j + 1);
        const Scalar den = c3 * m * m * m + c2 * m * m + p.d2 * m + Scalar(1);
        if (den.is_zero())
            throw Error(Errc::ZeroDenominatorInProduct, "denominator vanishes at j+1 = " + std::to_string(j + 1));
        // (-n)_k / k! contributes (-n + j)/(j + 1) per step.
        term *= Scalar(-n + j) / m * (p.a2 * Scalar(n + j) + Scalar(1)) *
                (p.b2 * Scalar(j * j) + p.b1 * Scalar(j) - at) / den;
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Difference equations satisfied by the data
// ---------------------------------------------------------------------------

/// h and x satisfy s_{k+3} - s_k = xi (s_{k+2} - s_{k+1}) for k + 3 <= K, and g
/// satisfies the order-five relation with g_0 = 0 for k + 5 <= K.
template <class F>
bool verify_difference_eqs(const TripleData<F>& t, const F& xi, int K)
{
    detail::require_depth(K >= 5 && K <= t.depth(), "verify_difference_eqs K=" + std::to_string(K));
    auto order3 = [&](auto seq) {
        for (int k = 0; k + 3 <= K; ++k)
            if (!(seq(k + 3) - seq(k) == xi * (seq(k + 2) - seq(k + 1))))
                return false;
        return true;
    };
    if (!order3([&](int k) { return t.h(k); }) || !order3([&](int k) { return t.x(k); }))
        return false;
    if (!detail::zero_test(t.g(0)))
        return false;
    const F c = xi * xi - xi - F(1);
    for (int k = 0; k + 5 <= K; ++k) {
        const F rhs = c * (t.g(k + 4) - t.g(k + 1) - (xi - F(1)) * (t.g(k + 3) - t.g(k + 2)));
        if (!(t.g(k + 5) - t.g(k) == rhs))
            return false;
    }
    return true;
}

/// d_k = g_k - x_{k-1}(h_k - h_0), with d_0 = 0.
template <class F>
std::vector<F> d_sequence(const TripleData<F>& t)
{
    std::vector<F> d(static_cast<std::size_t>(t.depth()) + 1, F(0));
    for (int k = 1; k <= t.depth(); ++k)
        d[static_cast<std::size_t>(k)] = t.g(k) - t.x(k - 1) * (t.h(k) - t.h(0));
    return d;
}

/// True iff d_k satisfies the order-three relation (with d_0 = 0) and g
/// satisfies the order-five relation on the same window.
///
/// The d-relation implies the g-relation whenever h and x satisfy theirs; the
/// converse needs the recurrence constraints as well (g_k = k^4, x_k = 0,
/// h_k = -k satisfies the g-relation but not the d-relation).
template <class F>
bool verify_d_relation(const TripleData<F>& t, const F& xi, int K)
{
    detail::require_depth(K >= 5 && K <= t.depth(), "verify_d_relation K=" + std::to_string(K));
    const std::vector<F> d = d_sequence(t);
    bool d_ok = detail::zero_test(d[0]);
    for (int k = 0; d_ok && k + 3 <= K; ++k) {
        const auto i = static_cast<std::size_t>(k);
        d_ok = d[i + 3] - d[i] == xi * (d[i + 2] - d[i + 1]);
    }
    return d_ok && verify_difference_eqs(t, xi, K);
}

} // namespace askeyvs

#endif
