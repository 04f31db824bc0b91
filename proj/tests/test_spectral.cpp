#include <gtest/gtest.h>

#include "askeyvs/hypergeometric.hpp"
#include "askeyvs/spectral.hpp"
#include "support.hpp"

using namespace askeyvs;
using testing_support::S;
using P = Poly<Scalar>;

namespace {

const TripleData<Scalar> charlier = testing_support::charlier_triple(Scalar(1));
const TripleData<Scalar> wilson1234 = testing_support::wilson_triple(1, 2, 3, 4);

/// U_n(at) summed straight from the definition: sum_k prod_{j<k} (h_n-h_j)(at-x_j)/g_{j+1}.
Scalar u_by_definition(const TripleData<Scalar>& t, int n, const Scalar& at)
{
    Scalar total(0);
    for (int k = 0; k <= n; ++k) {
        Scalar p(1);
        for (int j = 0; j < k; ++j)
            p *= (t.h(n) - t.h(j)) * (at - t.x(j)) / t.g(j + 1);
        total += p;
    }
    return total;
}

} // namespace

TEST(NewtonBasis, CharlierDegreeTwo)
{
    P v2 = newton_basis(charlier, 2);
    EXPECT_EQ(v2, P({0, -1, 1}));
    EXPECT_EQ(v2(Scalar(0)), Scalar(0));
    EXPECT_EQ(v2(Scalar(1)), Scalar(0));
}

TEST(NewtonBasis, DegreeZeroIsOne) { EXPECT_EQ(newton_basis(wilson1234, 0), P::constant(1)); }

TEST(NewtonBasis, WilsonFirst) { EXPECT_EQ(newton_basis(wilson1234, 1), P({1, 1})); }

TEST(CoeffC, DiagonalIsOne) { EXPECT_EQ(coeff_c(wilson1234, 5, 5), Scalar(1)); }

TEST(CoeffC, CharlierHandValues)
{
    EXPECT_EQ(coeff_c(charlier, 2, 0), Scalar(1));
    EXPECT_EQ(coeff_c(charlier, 2, 1), Scalar(-2));
}

TEST(MonicU, CharlierLowDegrees)
{
    EXPECT_EQ(monic_u(charlier, 0), P::constant(1));
    EXPECT_EQ(monic_u(charlier, 1), P({-1, 1}));
    EXPECT_EQ(monic_u(charlier, 2), P({1, -3, 1}));
    // u_2 = (x - A_1) u_1 - B_1 u_0 with A_1 = 2, B_1 = 1
    EXPECT_EQ(monic_u(charlier, 2), P({-2, 1}) * P({-1, 1}) - P::constant(1));
}

TEST(MonicU, DepthExceeded)
{
    try {
        (void)monic_u(charlier, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DepthExceeded);
    }
}

TEST(HypergeometricU, BinomialIsPowerOfOneMinusX)
{
    const auto bin = testing_support::binomial_triple();
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(hypergeometric_U(bin, n, Scalar(0)), Scalar(1));
        for (const Scalar& x : {S("2"), S("1/3"), S("-5/2+i")})
            EXPECT_EQ(hypergeometric_U(bin, n, x), ipow(Scalar(1) - x, n));
    }
}

TEST(HypergeometricU, CharlierDegreeOne)
{
    for (const Scalar& x : {S("4"), S("2/7"), S("i")})
        EXPECT_EQ(hypergeometric_U(charlier, 1, x), Scalar(1) - x);
}

TEST(HypergeometricU, CharlierMatchesTwoFZero)
{
    // 2F0(-n, -x; ; -1/a) at a = 1
    for (int n = 0; n <= 6; ++n)
        for (const Scalar& x : {S("3"), S("1/2"), S("-2/3+i")})
            EXPECT_EQ(hypergeometric_U(charlier, n, x), testing_support::series({Scalar(-n), -x}, {}, Scalar(-1), n));
}

TEST(HypergeometricU, DegreeZero) { EXPECT_EQ(hypergeometric_U(wilson1234, 0, S("17/3")), Scalar(1)); }

TEST(HypergeometricU, FactorTimesMonic)
{
    for (int n = 0; n <= 6; ++n)
        for (const Scalar& x : {S("3"), S("-1/2"), S("2+i")}) {
            EXPECT_EQ(hypergeometric_U(wilson1234, n, x), hypergeometric_factor(wilson1234, n) * monic_u(wilson1234, n)(x));
            EXPECT_EQ(hypergeometric_U(wilson1234, n, x), u_by_definition(wilson1234, n, x));
        }
}

TEST(OperatorMatrix, Charlier)
{
    Matrix<Scalar> m = operator_matrix(charlier, 2);
    Matrix<Scalar> want{{0, 1, 0}, {0, -1, 2}, {0, 0, -2}};
    EXPECT_EQ(m, want);
}

TEST(OperatorMatrix, SizeOne) { EXPECT_EQ(operator_matrix(wilson1234, 0), Matrix<Scalar>{{Scalar(0)}}); }

TEST(OperatorMatrix, WilsonOnes)
{
    auto w = testing_support::wilson_triple(1, 1, 1, 1);
    Matrix<Scalar> want{{0, 8}, {0, -4}}; // g_1 = 1*2*2*2
    EXPECT_EQ(operator_matrix(w, 1), want);
}

TEST(VerifyEigen, Holds)
{
    EXPECT_TRUE(verify_eigen(charlier, 2));
    EXPECT_TRUE(verify_eigen(charlier, 0));
    for (int n = 0; n <= 8; ++n)
        EXPECT_TRUE(verify_eigen(wilson1234, n));
}

TEST(VerifyEigen, CorruptedCoefficients)
{
    std::vector<Scalar> c{1, 0, 1};
    EXPECT_TRUE(verify_eigen_coefficients(charlier, 2, std::vector<Scalar>{1, -2, 1}));
    EXPECT_FALSE(verify_eigen_coefficients(charlier, 2, c));
}

TEST(Recurrence, Charlier)
{
    EXPECT_EQ(recurrence(charlier, 0).A, Scalar(1));
    EXPECT_FALSE(recurrence(charlier, 0).B.has_value());
    for (int n = 1; n <= 8; ++n) {
        auto r = recurrence(charlier, n);
        EXPECT_EQ(r.A, Scalar(n + 1));
        EXPECT_EQ(*r.B, Scalar(n));
    }
}

TEST(Recurrence, CharlierGeneralA)
{
    // monic Charlier: A_n = n + a, B_n = a n
    const Scalar a = S("5/3");
    auto t = testing_support::charlier_triple(a);
    for (int n = 1; n <= 8; ++n) {
        auto r = recurrence(t, n);
        EXPECT_EQ(r.A, Scalar(n) + a);
        EXPECT_EQ(*r.B, a * Scalar(n));
    }
}

TEST(Recurrence, Binomial)
{
    auto r = recurrence(testing_support::binomial_triple(), 1);
    EXPECT_EQ(r.A, Scalar(1));
    EXPECT_EQ(*r.B, Scalar(0));
}

TEST(VerifyTtrr, CharlierAndWilson)
{
    EXPECT_TRUE(verify_ttrr(charlier, 1).is_zero());
    for (int n = 1; n <= 5; ++n)
        EXPECT_TRUE(verify_ttrr(wilson1234, n).is_zero()) << n;
}

TEST(VerifyTtrr, PerturbedWilsonFails)
{
    std::vector<Scalar> g = wilson1234.g_values();
    g[3] += Scalar(1);
    TripleData<Scalar> bad(wilson1234.h_values(), wilson1234.x_values(), g);
    bool some_nonzero = false;
    for (int n = 1; n <= 3; ++n)
        some_nonzero = some_nonzero || !verify_ttrr(bad, n).is_zero();
    EXPECT_TRUE(some_nonzero);
}

TEST(Dualize, CharlierSwap)
{
    TripleData<Scalar> d = dualize(charlier);
    for (int k = 0; k <= 5; ++k) {
        EXPECT_EQ(d.h(k), Scalar(k));
        EXPECT_EQ(d.x(k), Scalar(-k));
        EXPECT_EQ(d.g(k), Scalar(k));
    }
}

TEST(Dualize, ConstantNodes)
{
    auto jac = testing_support::make_triple(
        6, [](const Scalar& k) { return -k * (k + Scalar(4)); }, [](const Scalar&) { return Scalar(1); },
        [](const Scalar& k) { return Scalar(-2) * k * (k + Scalar(1)); });
    try {
        (void)dualize(jac);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DualNotDefined);
    }
}

TEST(Duality, Identity)
{
    for (int m = 0; m <= 5; ++m) {
        EXPECT_TRUE(dual_identity_check(charlier, 0, m));
        EXPECT_TRUE(dual_identity_check(charlier, m, 0));
    }
    EXPECT_TRUE(dual_identity_check(charlier, 2, 3));
    // both sides summed from the definition
    auto d = dualize(charlier);
    EXPECT_EQ(u_by_definition(charlier, 2, charlier.x(3)), u_by_definition(d, 3, charlier.h(2)));
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
            EXPECT_TRUE(dual_identity_check(wilson1234, n, m)) << n << "," << m;
}

TEST(Construction, RejectsCollidingEigenvalues)
{
    try {
        (void)testing_support::make_triple(
            5, [](const Scalar& k) { return k * (k - Scalar(4)); }, [](const Scalar& k) { return k; },
            [](const Scalar& k) { return k; });
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CollidingEigenvalues);
    }
}

TEST(Construction, RejectsNonzeroG0)
{
    try {
        TripleData<Scalar>({0, 1}, {0, 1}, {1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidSpec);
    }
}

TEST(Hypergeometric, PochhammerValues)
{
    EXPECT_EQ(pochhammer(Scalar(3), 4), Scalar(3 * 4 * 5 * 6));
    EXPECT_EQ(pochhammer(Scalar(-2), 3), Scalar(0));
    EXPECT_EQ(q_pochhammer(Scalar(2), Scalar(3), 2), Scalar((1 - 2) * (1 - 6)));
}

TEST(Hypergeometric, ChuVandermonde)
{
    // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    const Scalar b = S("2/3"), c = S("7/2");
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(hypergeometric_pFq<Scalar>({Scalar(-n), b}, {c}, Scalar(1), n + 1),
                  pochhammer(c - b, n) / pochhammer(c, n));
}

TEST(Hypergeometric, QChuVandermonde)
{
    // 2phi1(q^-n, b; c; q, q) = (c/b; q)_n / (c; q)_n b^n
    const Scalar q(3), b = S("2/5"), c = S("7");
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(basic_hypergeometric<Scalar>({ipow(q, -n), b}, {c}, q, q, n + 1),
                  q_pochhammer(c / b, q, n) / q_pochhammer(c, q, n) * ipow(b, n));
}
