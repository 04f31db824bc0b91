#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "askeyvs/classify.hpp"
#include "support.hpp"

using namespace askeyvs;
using testing_support::S;

namespace {

/// Wilson coefficients expanded by hand from h_k = -k(k+9), x_k = -(k+1)^2,
/// g_k = k(k+2)(k+3)(k+4) = k^4 + 9k^3 + 26k^2 + 24k.
SeqSpecQ1 wilson_spec()
{
    SeqSpecQ1 s;
    s.a1 = -9;
    s.a2 = -1;
    s.b0 = -1;
    s.b1 = -2;
    s.b2 = -1;
    s.d1 = 24;
    s.d2 = 26;
    s.d3 = 9;
    s.d4 = 1;
    return s;
}

SeqSpecQ1 charlier_spec()
{
    SeqSpecQ1 s;
    s.a1 = -1;
    s.b1 = 1;
    s.d1 = 1;
    return s;
}

SeqSpecQ1 binomial_spec()
{
    SeqSpecQ1 s;
    s.a1 = -1;
    s.d1 = 1;
    return s;
}

/// Askey-Wilson h and x in q-form for q = 2, a = 3, b = c = d = 1 (g is set per test).
SeqSpecQ askey_wilson_spec()
{
    // abcd = 3, q = 2
    // h_k = q^-k - 1 - abcd/q + abcd/q q^k  ->  a-1 = 1, a0 = -(1 + 3/2), a1 = 3/2
    // x_k = a q^k + a^-1 q^-k                ->  b1 = 3, b-1 = 1/3
    SeqSpecQ s;
    s.q = 2;
    s.A(-1) = 1;
    s.A(0) = S("-5/2");
    s.A(1) = S("3/2");
    s.B(-1) = S("1/3");
    s.B(1) = 3;
    return s;
}

} // namespace

TEST(Constraints, WilsonHandExpansion)
{
    SeqSpecQ1 w = wilson_spec();
    EXPECT_TRUE(check_q1_constraints(w));
    auto t = testing_support::wilson_triple(1, 2, 3, 4);
    for (int k = 0; k <= 8; ++k) {
        EXPECT_EQ(w.h(k), t.h(k));
        EXPECT_EQ(w.x(k), t.x(k));
        EXPECT_EQ(w.g(k), t.g(k));
    }
}

TEST(Constraints, CharlierTrivial) { EXPECT_TRUE(check_q1_constraints(charlier_spec())); }

TEST(Constraints, PerturbedD3)
{
    SeqSpecQ1 w = wilson_spec();
    w.d3 += 1;
    EXPECT_FALSE(check_q1_constraints(w));
}

TEST(Constraints, AskeyWilsonQForm)
{
    const Scalar q(2), a(3), b(1), c(1), d(1);
    SeqSpecQ s = askey_wilson_spec();
    // g_k = (1/a) q (q^-2k)(1-q^k)(1 - ab q^{k-1})(1 - ac q^{k-1})(1 - ad q^{k-1})
    // with ab = ac = ad = 3: (1-3q^{k-1})^3 = 1 - 9/2 q^k + 27/4 q^2k - 27/8 q^3k
    // times (1-q^k): 1 - 11/2 q^k + 45/4 q^2k - 81/8 q^3k + 27/8 q^4k
    // times q/a q^-2k = 2/3 q^-2k
    s.D(-2) = S("2/3");
    s.D(-1) = S("-11/3");
    s.D(0) = S("15/2");
    s.D(1) = S("-27/4");
    s.D(2) = S("9/4");
    for (int k = 0; k <= 6; ++k) {
        Scalar qk = ipow(q, k);
        Scalar g = q / a * ipow(q, -2 * k) * (Scalar(1) - qk) * (Scalar(1) - a * b * qk / q) *
                   (Scalar(1) - a * c * qk / q) * (Scalar(1) - a * d * qk / q);
        EXPECT_EQ(s.g(k), g) << k;
        Scalar h = ipow(q, -k) * (Scalar(1) - qk) * (Scalar(1) - a * b * c * d * qk / q);
        EXPECT_EQ(s.h(k), h) << k;
        EXPECT_EQ(s.x(k), a * qk + Scalar(1) / (a * qk)) << k;
    }
    EXPECT_TRUE(check_q_constraints(s));
    s.D(2) += 1;
    s.D(0) -= 1;
    EXPECT_FALSE(check_q_constraints(s));
}

TEST(Constraints, QSpecWithoutGRejected)
{
    SeqSpecQ s = askey_wilson_spec();
    try {
        s.validate();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidSpec);
    }
}

TEST(GeneralConstraints, ConstantData)
{
    auto [g3, g4] = general_constraints(5, 5, 5, 2, 2, 2, 0, 0, 3);
    EXPECT_EQ(g3, Scalar(0));
    EXPECT_EQ(g4, Scalar(0));
}

TEST(GeneralConstraints, WilsonValues)
{
    auto t = testing_support::wilson_triple(1, 2, 3, 4);
    auto [g3, g4] = general_constraints(t.h(0), t.h(1), t.h(2), t.x(0), t.x(1), t.x(2), t.g(1), t.g(2), Scalar(3));
    EXPECT_EQ(g3, Scalar(630));
    EXPECT_EQ(g4, Scalar(1344));
}

TEST(GeneralConstraints, SymmetricInHAndX)
{
    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i) {
        std::vector<Scalar> v;
        for (int j = 0; j < 9; ++j)
            v.push_back(testing_support::random_gaussian(rng));
        auto a = general_constraints(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]);
        auto b = general_constraints(v[3], v[4], v[5], v[0], v[1], v[2], v[6], v[7], v[8]);
        EXPECT_EQ(a, b);
    }
}

TEST(GeneralConstraints, AgreesWithTtrrQ1)
{
    // a random spec obeying the q=1 constraints: g_3, g_4 follow from g_1, g_2
    std::mt19937 rng(29);
    for (int i = 0; i < 10; ++i) {
        SeqSpecQ1 s;
        for (auto* c : {&s.a0, &s.a1, &s.a2, &s.b0, &s.b1, &s.b2, &s.d1, &s.d2})
            *c = testing_support::random_gaussian(rng);
        s.d3 = s.a1 * s.b2 + s.a2 * s.b1 - Scalar(2) * s.a2 * s.b2;
        s.d4 = s.a2 * s.b2;
        auto [g3, g4] = general_constraints(s.h(0), s.h(1), s.h(2), s.x(0), s.x(1), s.x(2), s.g(1), s.g(2), Scalar(3));
        EXPECT_EQ(g3, s.g(3));
        EXPECT_EQ(g4, s.g(4));
    }
}

TEST(DegreeTriple, Examples)
{
    EXPECT_EQ(degree_triple(wilson_spec()), (DegreeTriple{2, 4, 2}));
    EXPECT_EQ(degree_triple(charlier_spec()), (DegreeTriple{1, 1, 1}));
    EXPECT_EQ(degree_triple(binomial_spec()), (DegreeTriple{0, 1, 1}));
}

TEST(DegreeTriple, RuleViolation)
{
    SeqSpecQ1 s = charlier_spec();
    s.d4 = 1; // deg g = 4 with deg x + deg h = 2
    try {
        (void)degree_triple(s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::RuleViolation);
    }
}

TEST(Bidegree, Examples)
{
    SeqSpecQ aw = askey_wilson_spec();
    aw.D(-2) = 1;
    aw.D(2) = -1;
    EXPECT_EQ(bidegree_triple(aw), (BidegreeTriple{-1, 1, -2, 2, -1, 1}));

    SeqSpecQ asc;
    asc.q = 2;
    asc.A(-1) = 1;
    asc.A(0) = -1;
    asc.B(-1) = 1;
    asc.B(1) = 1;
    asc.D(-2) = 2;
    asc.D(-1) = -3;
    asc.D(0) = 1;
    EXPECT_EQ(bidegree_triple(asc), (BidegreeTriple{-1, 1, -2, 0, -1, 0}));

    SeqSpecQ sw;
    sw.q = 2;
    sw.A(0) = 1;
    sw.A(1) = -1;
    sw.D(-1) = 1;
    sw.D(0) = -1;
    EXPECT_EQ(bidegree_triple(sw), (BidegreeTriple{0, 0, -1, 0, 0, 1}));
}

TEST(Bidegree, QDual)
{
    BidegreeTriple aw{-1, 1, -2, 2, -1, 1};
    EXPECT_EQ(q_dual_bidegree(aw), aw);
    BidegreeTriple t{0, 1, -1, 1, -1, 0};
    EXPECT_EQ(q_dual_bidegree(t), (BidegreeTriple{-1, 0, -1, 1, 0, 1}));
    EXPECT_EQ(q_dual_bidegree(q_dual_bidegree(t)), t);
}

TEST(Bidegree, ToDegree)
{
    EXPECT_EQ(degree_from_bidegree({-1, 1, -2, 2, -1, 1}), (DegreeTriple{2, 4, 2}));
    EXPECT_EQ(degree_from_bidegree({0, 0, -1, 0, 0, 1}), (DegreeTriple{0, 1, 1}));
}

TEST(Normalize, Laguerre)
{
    // alpha = 2: h_k = -k, x_k = 0, g_k = k(k+2) = 2k + k^2
    SeqSpecQ1 s;
    s.a1 = -1;
    s.d1 = 2;
    s.d2 = 1;
    // h -> -h (g -> -g), then x -> -x/2 (g -> g/2): g_k = k + k^2/2
    EXPECT_EQ(normalize_uniform(s), (UniformParams{0, 0, 0, S("1/2")}));
}

TEST(Normalize, AffineChangeOfVariable)
{
    // The normalized U_n at the image point equals the original U_n.
    SeqSpecQ1 w = wilson_spec();
    SeqSpecQ1 n = normalized_spec(w);
    auto t = w.triple(8), tn = n.triple(8);
    // x -> (x - b0) * a1/d1
    const Scalar rho = w.a1 / w.d1;
    for (int deg = 0; deg <= 5; ++deg)
        for (const Scalar& x : {S("3"), S("-1/2"), S("1+i")})
            EXPECT_EQ(hypergeometric_U(tn, deg, (x - w.b0) * rho), hypergeometric_U(t, deg, x));
}

TEST(Normalize, Idempotent)
{
    SeqSpecQ1 once = normalized_spec(wilson_spec());
    EXPECT_EQ(normalized_spec(once), once);
}

TEST(Normalize, BinomialAfterSymmetries)
{
    // binomial has a1 = -1 and normalizes to the all-zero pattern
    EXPECT_EQ(normalize_uniform(binomial_spec()), (UniformParams{0, 0, 0, 0}));
    SeqSpecQ1 s = binomial_spec();
    s.a1 = 0;
    s.a2 = 1;
    try {
        (void)normalize_uniform(s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotNormalizable);
    }
}

TEST(UniformU, DegreeZero) { EXPECT_EQ(uniform_U(0, {S("1/3"), 2, 5, 7}, S("11")), Scalar(1)); }

TEST(UniformU, MatchesSpectral)
{
    std::mt19937 rng(31);
    std::vector<UniformParams> ps{{0, 0, 0, 0}, normalize_uniform(wilson_spec())};
    for (int i = 0; i < 5; ++i)
        ps.push_back({testing_support::random_rational(rng), testing_support::random_rational(rng),
                      testing_support::random_rational(rng), testing_support::random_rational(rng)});
    for (const auto& p : ps) {
        std::optional<TripleData<Scalar>> t;
        try {
            t = uniform_spec(p).triple(6);
        } catch (const Error&) {
            continue;
        }
        for (int n = 0; n <= 4; ++n)
            for (const Scalar& x : {S("5/7"), S("-3"), S("2-i")}) {
                try {
                    EXPECT_EQ(uniform_U(n, p, x), hypergeometric_U(*t, n, x));
                } catch (const Error& e) {
                    EXPECT_TRUE(e.code() == Errc::ZeroDenominatorInProduct || e.code() == Errc::ZeroGInRange);
                }
            }
    }
}

TEST(DifferenceEquations, WilsonAndAskeyWilson)
{
    EXPECT_TRUE(verify_difference_eqs(testing_support::wilson_triple(1, 2, 3, 4), Scalar(3), 10));
    SeqSpecQ aw = askey_wilson_spec();
    aw.D(-2) = S("2/3");
    aw.D(-1) = S("-11/3");
    aw.D(0) = S("15/2");
    aw.D(1) = S("-27/4");
    aw.D(2) = S("9/4");
    EXPECT_TRUE(verify_difference_eqs(aw.triple(9), S("7/2"), 9));
}

TEST(DifferenceEquations, CubicHFails)
{
    auto t = testing_support::make_triple(
        8, [](const Scalar& k) { return k * k * k; }, [](const Scalar& k) { return k; },
        [](const Scalar& k) { return k; });
    EXPECT_FALSE(verify_difference_eqs(t, Scalar(3), 8));
}

TEST(DRelation, WilsonCharlierAndPerturbed)
{
    auto w = testing_support::wilson_triple(1, 2, 3, 4);
    EXPECT_TRUE(verify_d_relation(w, Scalar(3), 10));
    EXPECT_TRUE(verify_d_relation(testing_support::charlier_triple(1), Scalar(3), 10));
    std::vector<Scalar> g = w.g_values();
    g[4] += 1;
    TripleData<Scalar> bad(w.h_values(), w.x_values(), g);
    EXPECT_FALSE(verify_d_relation(bad, Scalar(3), 10));
    EXPECT_FALSE(verify_difference_eqs(bad, Scalar(3), 10));
}

TEST(Symmetries, PreserveConstraintsAndDegrees)
{
    std::mt19937 rng(37);
    SeqSpecQ1 w = wilson_spec();
    for (int i = 0; i < 10; ++i) {
        Scalar rho = testing_support::random_nonzero(rng), sigma = testing_support::random_gaussian(rng);
        for (const SeqSpecQ1& s : {dilate_h(w, rho), translate_h(w, sigma), dilate_x(w, rho), translate_x(w, sigma)}) {
            EXPECT_TRUE(check_q1_constraints(s));
            EXPECT_EQ(degree_triple(s), degree_triple(w));
            EXPECT_EQ(normalize_uniform(s), normalize_uniform(w));
        }
    }
}
