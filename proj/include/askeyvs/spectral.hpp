#ifndef ASKEYVS_SPECTRAL_HPP
#define ASKEYVS_SPECTRAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace askeyvs {

/// Evaluated data sequences h_k, x_k (k = 0..K) and g_k (k = 1..K, g_0 = 0).
///
/// h_k are eigenvalues of the operator L, x_k are the Newton nodes and g_k the
/// lowering coefficients of L in the Newton basis. Construction rejects
/// colliding eigenvalues h_i = h_j, because every coefficient c_{n,k} divides
/// by h_n - h_j.
template <class F>
class TripleData {
public:
    /// All three vectors have K+1 entries; g[0] must be zero.
    TripleData(std::vector<F> h, std::vector<F> x, std::vector<F> g)
        : h_(std::move(h)), x_(std::move(x)), g_(std::move(g))
    {
        if (h_.empty() || h_.size() != x_.size() || h_.size() != g_.size())
            throw Error(Errc::InvalidSpec, "h, x, g must have equal nonzero length");
        if (!detail::zero_test(g_[0]))
            throw Error(Errc::InvalidSpec, "g_0 must be 0");
        for (std::size_t i = 0; i < h_.size(); ++i)
            for (std::size_t j = i + 1; j < h_.size(); ++j)
                if (h_[i] == h_[j])
                    throw Error(Errc::CollidingEigenvalues,
                                "h_" + std::to_string(i) + " = h_" + std::to_string(j));
    }

    int depth() const noexcept { return static_cast<int>(h_.size()) - 1; }

    const F& h(int k) const { return h_.at(static_cast<std::size_t>(k)); }
    const F& x(int k) const { return x_.at(static_cast<std::size_t>(k)); }
    const F& g(int k) const { return g_.at(static_cast<std::size_t>(k)); }

    const std::vector<F>& h_values() const noexcept { return h_; }
    const std::vector<F>& x_values() const noexcept { return x_; }
    const std::vector<F>& g_values() const noexcept { return g_; }

    friend bool operator==(const TripleData& a, const TripleData& b)
    {
        return a.h_ == b.h_ && a.x_ == b.x_ && a.g_ == b.g_;
    }

private:
    std::vector<F> h_, x_, g_;
};

/// Square matrix stored row-major as nested vectors.
template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct RecurrenceCoeffs {
    F A;
    std::optional<F> B; // absent for n = 0
};

namespace detail {

inline void require_depth(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(Errc::DepthExceeded, what);
}

} // namespace detail

/// v_k(x) = (x - x_0)...(x - x_{k-1}).
template <class F>
Poly<F> newton_basis(const TripleData<F>& t, int k)
{
    detail::require_depth(k >= 0 && k <= t.depth(), "newton_basis k=" + std::to_string(k));
    Poly<F> v = Poly<F>::constant(F(1));
    for (int j = 0; j < k; ++j)
        v *= Poly<F>::linear(t.x(j));
    return v;
}

/// c_{n,k} = prod_{j=k}^{n-1} g_{j+1} / (h_n - h_j), c_{n,n} = 1.
template <class F>
F coeff_c(const TripleData<F>& t, int n, int k)
{
    detail::require_depth(0 <= k && k <= n && n <= t.depth() - 1,
                          "coeff_c n=" + std::to_string(n) + " k=" + std::to_string(k));
    F c(1);
    for (int j = k; j < n; ++j)
        c = c * t.g(j + 1) / (t.h(n) - t.h(j));
    return c;
}

/// Newton coordinates (c_{n,0}, ..., c_{n,n}) of u_n.
template <class F>
std::vector<F> newton_coefficients(const TripleData<F>& t, int n)
{
    detail::require_depth(0 <= n && n <= t.depth() - 1, "newton_coefficients n=" + std::to_string(n));
    std::vector<F> c(static_cast<std::size_t>(n) + 1, F(0));
    c[static_cast<std::size_t>(n)] = F(1);
    for (int k = n - 1; k >= 0; --k)
        c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) + 1] * t.g(k + 1) / (t.h(n) - t.h(k));
    return c;
}

/// Monic u_n(x) = sum_k c_{n,k} v_k(x).
template <class F>
Poly<F> monic_u(const TripleData<F>& t, int n)
{
    std::vector<F> c = newton_coefficients(t, n);
    Poly<F> u;
    Poly<F> v = Poly<F>::constant(F(1));
    for (int k = 0; k <= n; ++k) {
        u += v * c[static_cast<std::size_t>(k)];
        if (k < n)
            v *= Poly<F>::linear(t.x(k));
    }
    return u;
}

namespace detail {

template <class F>
void require_nonzero_g(const TripleData<F>& t, int n)
{
    for (int j = 1; j <= n; ++j)
        if (zero_test(t.g(j)))
            throw Error(Errc::ZeroGInRange, "g_" + std::to_string(j) + " = 0 (finite system truncates at n = " +
                                                std::to_string(j - 1) + ")");
}

} // namespace detail

/// prod_{j<n} (h_n - h_j) / g_{j+1}, the factor with U_n = factor * u_n.
template <class F>
F hypergeometric_factor(const TripleData<F>& t, int n)
{
    detail::require_depth(0 <= n && n <= t.depth(), "hypergeometric_factor n=" + std::to_string(n));
    detail::require_nonzero_g(t, n);
    F f(1);
    for (int j = 0; j < n; ++j)
        f = f * (t.h(n) - t.h(j)) / t.g(j + 1);
    return f;
}

/// U_n(at) = sum_{k=0}^n prod_{j<k} (h_n - h_j)(at - x_j) / g_{j+1}.
///
/// Only h_0..h_n, x_0..x_{n-1} and g_1..g_n are used, so n may equal the depth.
template <class F, class T = F>
T hypergeometric_U(const TripleData<F>& t, int n, const T& at)
{
    detail::require_depth(0 <= n && n <= t.depth(), "hypergeometric_U n=" + std::to_string(n));
    detail::require_nonzero_g(t, n);
    T sum(1), term(1);
    for (int k = 1; k <= n; ++k) {
        const int j = k - 1;
        term = term * T(t.h(n) - t.h(j)) * (at - T(t.x(j))) / T(t.g(j + 1));
        sum = sum + term;
    }
    return sum;
}

/// Matrix of L in the Newton basis v_0..v_N: column k holds h_k on the
/// diagonal and g_k just above it (L v_k = h_k v_k + g_k v_{k-1}).
template <class F>
Matrix<F> operator_matrix(const TripleData<F>& t, int N)
{
    detail::require_depth(0 <= N && N <= t.depth() - 1, "operator_matrix N=" + std::to_string(N));
    const auto size = static_cast<std::size_t>(N) + 1;
    Matrix<F> m(size, std::vector<F>(size, F(0)));
    for (int k = 0; k <= N; ++k) {
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = t.h(k);
        if (k > 0)
            m[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(k)] = t.g(k);
    }
    return m;
}

/// True iff the operator matrix maps `coeffs` (Newton coordinates of some
/// degree-n polynomial) to h_n * coeffs.
template <class F>
bool verify_eigen_coefficients(const TripleData<F>& t, int n, const std::vector<F>& coeffs)
{
    detail::require_depth(0 <= n && n <= t.depth() - 1, "verify_eigen n=" + std::to_string(n));
    if (coeffs.size() != static_cast<std::size_t>(n) + 1)
        throw Error(Errc::InvalidSpec, "coefficient vector must have n+1 entries");
    const Matrix<F> m = operator_matrix(t, n);
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        F acc(0);
        for (std::size_t c = 0; c < coeffs.size(); ++c)
            if (!detail::zero_test(m[r][c]))
                acc = acc + m[r][c] * coeffs[c];
        if (!(acc == t.h(n) * coeffs[r]))
            return false;
    }
    return true;
}

template <class F>
bool verify_eigen(const TripleData<F>& t, int n)
{
    return verify_eigen_coefficients(t, n, newton_coefficients(t, n));
}

/// A_n and B_n of x u_n = u_{n+1} + A_n u_n + B_n u_{n-1}.
///
/// For n = 0 only A_0 = x_0 - g_1/(h_1 - h_0) is produced. Terms carrying
/// g_0 vanish, which removes the h_{-1} reference in B_1.
template <class F>
RecurrenceCoeffs<F> recurrence(const TripleData<F>& t, int n)
{
    detail::require_depth(0 <= n && n + 1 <= t.depth(), "recurrence n=" + std::to_string(n));
    if (n == 0)
        return {t.x(0) - t.g(1) / (t.h(1) - t.h(0)), std::nullopt};
    const F lower = t.g(n) / (t.h(n - 1) - t.h(n));
    const F upper = t.g(n + 1) / (t.h(n) - t.h(n + 1));
    F A = t.x(n) + upper - lower;
    F inner = F(0) - lower + t.g(n + 1) / (t.h(n - 1) - t.h(n + 1)) + t.x(n) - t.x(n - 1);
    if (n >= 2)
        inner = inner + t.g(n - 1) / (t.h(n - 2) - t.h(n));
    return {A, lower * inner};
}

/// Residual x u_n - u_{n+1} - A_n u_n - B_n u_{n-1}; zero certifies the
/// three-term recurrence at level n.
template <class F>
Poly<F> verify_ttrr(const TripleData<F>& t, int n)
{
    detail::require_depth(1 <= n && n <= t.depth() - 2, "verify_ttrr n=" + std::to_string(n));
    const RecurrenceCoeffs<F> r = recurrence(t, n);
    const Poly<F> un = monic_u(t, n);
    return Poly<F>::monomial(F(1), 1) * un - monic_u(t, n + 1) - un * r.A - monic_u(t, n - 1) * *r.B;
}

/// Exchange of the h and x sequences; g is kept.
template <class F>
TripleData<F> dualize(const TripleData<F>& t)
{
    for (int i = 0; i <= t.depth(); ++i)
        for (int j = i + 1; j <= t.depth(); ++j)
            if (t.x(i) == t.x(j))
                throw Error(Errc::DualNotDefined,
                            "x_" + std::to_string(i) + " = x_" + std::to_string(j) + ", nodes must be distinct");
    return TripleData<F>(t.x_values(), t.h_values(), t.g_values());
}

/// U_n(x_m) == dual U_m(h_n).
template <class F>
bool dual_identity_check(const TripleData<F>& t, int n, int m)
{
    detail::require_depth(0 <= n && n <= t.depth() - 1 && 0 <= m && m <= t.depth() - 1,
                          "dual_identity_check n=" + std::to_string(n) + " m=" + std::to_string(m));
    const TripleData<F> dual = dualize(t);
    return hypergeometric_U(t, n, t.x(m)) == hypergeometric_U(dual, m, t.h(n));
}

} // namespace askeyvs

#endif
