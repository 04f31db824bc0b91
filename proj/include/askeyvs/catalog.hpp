#ifndef ASKEYVS_CATALOG_HPP
#define ASKEYVS_CATALOG_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "error.hpp"
#include "hypergeometric.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "scheme_graph.hpp"
#include "spectral.hpp"

namespace askeyvs {

using ParamMap = std::map<std::string, Scalar>;

inline constexpr int kDefaultDepth = 12;

/// A named q = 1 family of the scheme or one of the q-families used for
/// the q -> 1 limits.
struct FamilyEntry {
    std::string id;       // "wilson", "al-salam-chihara", ...
    std::string acronym;  // "W", "ASC", ...
    std::string full_name;
    std::string kls_tag;  // section tag as printed, kept opaque
    std::vector<std::string> params;
    bool is_q = false;
    std::optional<DegreeTriple> degrees;
    std::optional<BidegreeTriple> bidegrees;
    std::optional<NodeId> node;
    bool x_distinct = true;

    std::function<void(const ParamMap&)> admissible;
    std::function<std::optional<int>(const ParamMap&)> finite_N;
    std::function<SeqSpecQ1(const ParamMap&)> build_q1;
    std::function<SeqSpecQ(const ParamMap&)> build_q;
    /// Native variable y of the hypergeometric form -> x.
    std::function<Scalar(const ParamMap&, const Scalar&)> lattice;
    std::function<Scalar(const ParamMap&, int, const Scalar&)> oracle;
    std::function<std::optional<Scalar>(const ParamMap&, int)> k_n;
    std::function<Scalar(const ParamMap&, int)> prefactor;
    std::function<ParamMap(std::mt19937&)> sample;
};

struct FamilyInstance {
    const FamilyEntry* entry;
    ParamMap params;
    std::optional<SeqSpecQ1> q1;
    std::optional<SeqSpecQ> q;
    TripleData<Scalar> data;
    std::optional<int> finite_N;

    /// Largest n for which u_n is part of the system at this depth.
    int max_degree() const
    {
        int m = data.depth() - 1;
        return finite_N ? std::min(m, *finite_N) : m;
    }
};

namespace detail {

inline Error inadmissible(const std::string& what) { return Error(Errc::InadmissibleParameters, what); }

inline const Scalar& param(const ParamMap& p, const std::string& name)
{
    auto it = p.find(name);
    if (it == p.end())
        throw inadmissible("missing parameter '" + name + "'");
    return it->second;
}

inline int positive_int(const ParamMap& p, const std::string& name)
{
    const Scalar& v = param(p, name);
    auto n = v.to_long();
    if (!n || *n < 1 || *n > 1000)
        throw inadmissible(name + " must be a positive integer, got " + v.to_string());
    return static_cast<int>(*n);
}

inline void nonzero(const ParamMap& p, const std::string& name)
{
    if (param(p, name).is_zero())
        throw inadmissible(name + " != 0");
}

/// Negative integer -N (N >= 1) encoded by v, if any.
inline std::optional<int> negative_integer(const Scalar& v)
{
    auto n = v.to_long();
    if (n && *n <= -1 && *n >= -1000)
        return static_cast<int>(-*n);
    return std::nullopt;
}

inline Scalar S(long v) { return Scalar(v); }
inline Scalar half() { return Scalar::ratio(1, 2); }
inline const Scalar I = Scalar::i();

/// Racah truncation: exactly one of alpha+1, beta+delta+1, gamma+1 equals -N.
inline int racah_N(const ParamMap& p)
{
    const Scalar& al = param(p, "alpha");
    const Scalar& be = param(p, "beta");
    const Scalar& ga = param(p, "gamma");
    const Scalar& de = param(p, "delta");
    std::optional<int> found;
    for (const Scalar& e : {al + 1, be + de + 1, ga + 1}) {
        auto n = negative_integer(e);
        if (!n)
            continue;
        if (found && *found != *n)
            throw inadmissible("alpha+1, beta+delta+1, gamma+1 give two different N (" + std::to_string(*found) +
                               ", " + std::to_string(*n) + ")");
        found = n;
    }
    if (!found)
        throw inadmissible("one of alpha+1, beta+delta+1, gamma+1 must equal -N with N a positive integer");
    return *found;
}

inline long draw(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Scalar pfq(std::vector<Scalar> up, std::vector<Scalar> lo, const Scalar& z, int n)
{
    return hypergeometric_pFq(up, lo, z, n + 1);
}

inline Scalar qphi(std::vector<Scalar> up, std::vector<Scalar> lo, const Scalar& q, const Scalar& z, int n)
{
    return basic_hypergeometric(up, lo, q, z, n + 1);
}

inline Scalar identity_lattice(const ParamMap&, const Scalar& y) { return y; }

/// Fills d1..d4 from the roots of g_k / (lead k) = prod (k + r_i).
inline void set_g(SeqSpecQ1& s, const Scalar& lead, const std::vector<Scalar>& shifts)
{
    // Coefficients of prod (k + r) in increasing powers of k.
    std::vector<Scalar> c{Scalar(1)};
    for (const Scalar& r : shifts) {
        std::vector<Scalar> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i] * r;
            next[i + 1] += c[i];
        }
        c = std::move(next);
    }
    c.resize(4);
    s.d1 = lead * c[0];
    s.d2 = lead * c[1];
    s.d3 = lead * c[2];
    s.d4 = lead * c[3];
}

inline std::optional<Scalar> some(Scalar v) { return v; }
inline Scalar one(const ParamMap&, int) { return Scalar(1); }

inline std::vector<FamilyEntry> make_catalog()
{
    std::vector<FamilyEntry> cat;
    auto P = [](const ParamMap& p, const char* n) -> const Scalar& { return param(p, n); };
    auto fact = [](int n) { return pochhammer(Scalar(1), n); };

    {
        FamilyEntry e;
        e.id = "wilson";
        e.acronym = "W";
        e.full_name = "Wilson";
        e.kls_tag = "1";
        e.params = {"a", "b", "c", "d"};
        e.degrees = DegreeTriple{2, 4, 2};
        e.node = NodeId::WR;
        e.admissible = [P](const ParamMap& p) {
            Scalar s = P(p, "a") + P(p, "b") + P(p, "c") + P(p, "d");
            if (auto n = s.to_long(); n && *n <= 0)
                throw inadmissible("a+b+c+d not in Z<=0, got " + s.to_string());
        };
        e.build_q1 = [P](const ParamMap& p) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c"), &d = P(p, "d");
            SeqSpecQ1 s;
            s.b0 = -(a * a);
            s.b1 = S(-2) * a;
            s.b2 = -1;
            s.a1 = S(1) - (a + b + c + d);
            s.a2 = -1;
            set_g(s, 1, {a + b - 1, a + c - 1, a + d - 1});
            return s;
        };
        e.lattice = [](const ParamMap&, const Scalar& y) { return y * y; };
        e.oracle = [P](const ParamMap& p, int n, const Scalar& y) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c"), &d = P(p, "d");
            return pfq({S(-n), S(n) + a + b + c + d - 1, a + I * y, a - I * y}, {a + b, a + c, a + d}, 1, n);
        };
        e.k_n = [P](const ParamMap& p, int n) {
            Scalar s = P(p, "a") + P(p, "b") + P(p, "c") + P(p, "d");
            return some(ipow(S(-1), n) * pochhammer(S(n) + s - 1, n));
        };
        e.prefactor = [P](const ParamMap& p, int n) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c"), &d = P(p, "d");
            return pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n);
        };
        e.sample = [](std::mt19937& r) {
            return ParamMap{{"a", draw(r, 1, 5)}, {"b", draw(r, 1, 5)}, {"c", draw(r, 1, 5)}, {"d", draw(r, 1, 5)}};
        };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "racah";
        e.acronym = "R";
        e.full_name = "Racah";
        e.kls_tag = "2";
        e.params = {"alpha", "beta", "gamma", "delta"};
        e.degrees = DegreeTriple{2, 4, 2};
        e.node = NodeId::WR;
        e.admissible = [](const ParamMap& p) { racah_N(p); };
        e.finite_N = [](const ParamMap& p) { return std::optional<int>(racah_N(p)); };
        e.build_q1 = [P](const ParamMap& p) {
            const Scalar &al = P(p, "alpha"), &be = P(p, "beta"), &ga = P(p, "gamma"), &de = P(p, "delta");
            SeqSpecQ1 s;
            s.b1 = ga + de + 1;
            s.b2 = 1;
            s.a1 = al + be + 1;
            s.a2 = 1;
            set_g(s, 1, {al, be + de, ga});
            return s;
        };
        e.lattice = [P](const ParamMap& p, const Scalar& y) { return y * (y + P(p, "gamma") + P(p, "delta") + 1); };
        e.oracle = [P](const ParamMap& p, int n, const Scalar& y) {
            const Scalar &al = P(p, "alpha"), &be = P(p, "beta"), &ga = P(p, "gamma"), &de = P(p, "delta");
            return pfq({S(-n), S(n) + al + be + 1, -y, y + ga + de + 1}, {al + 1, be + de + 1, ga + 1}, 1, n);
        };
        e.k_n = [P](const ParamMap& p, int n) {
            const Scalar &al = P(p, "alpha"), &be = P(p, "beta"), &ga = P(p, "gamma"), &de = P(p, "delta");
            return some(pochhammer(S(n) + al + be + 1, n) /
                        (pochhammer(al + 1, n) * pochhammer(be + de + 1, n) * pochhammer(ga + 1, n)));
        };
        e.prefactor = one;
        e.sample = [](std::mt19937& r) {
            long N = draw(r, 2, 6);
            return ParamMap{{"alpha", -N - 1}, {"beta", draw(r, N + 1, N + 4)}, {"gamma", draw(r, 1, 4)},
                            {"delta", draw(r, 1, 4)}};
        };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "continuous-dual-hahn";
        e.acronym = "cdH";
        e.full_name = "continuous dual Hahn";
        e.kls_tag = "3";
        e.params = {"a", "b", "c"};
        e.degrees = DegreeTriple{2, 3, 1};
        e.node = NodeId::cdH_dH;
        e.build_q1 = [P](const ParamMap& p) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c");
            SeqSpecQ1 s;
            s.b0 = -(a * a);
            s.b1 = S(-2) * a;
            s.b2 = -1;
            s.a1 = -1;
            set_g(s, 1, {a + b - 1, a + c - 1});
            return s;
        };
        e.lattice = [](const ParamMap&, const Scalar& y) { return y * y; };
        e.oracle = [P](const ParamMap& p, int n, const Scalar& y) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c");
            return pfq({S(-n), a + I * y, a - I * y}, {a + b, a + c}, 1, n);
        };
        e.k_n = [](const ParamMap&, int n) { return some(ipow(S(-1), n)); };
        e.prefactor = [P](const ParamMap& p, int n) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c");
            return pochhammer(a + b, n) * pochhammer(a + c, n);
        };
        e.sample = [](std::mt19937& r) {
            return ParamMap{{"a", draw(r, 1, 5)}, {"b", draw(r, 1, 5)}, {"c", draw(r, 1, 5)}};
        };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "dual-hahn";
        e.acronym = "dH";
        e.full_name = "dual Hahn";
        e.kls_tag = "6";
        e.params = {"gamma", "delta", "N"};
        e.degrees = DegreeTriple{2, 3, 1};
        e.node = NodeId::cdH_dH;
        e.admissible = [](const ParamMap& p) { positive_int(p, "N"); };
        e.finite_N = [](const ParamMap& p) { return std::optional<int>(positive_int(p, "N")); };
        e.build_q1 = [P](const ParamMap& p) {
            const Scalar &ga = P(p, "gamma"), &de = P(p, "delta"), &N = P(p, "N");
            SeqSpecQ1 s;
            s.b1 = ga + de + 1;
            s.b2 = 1;
            s.a1 = -1;
            // k(k+gamma)(N-k+1) = -k(k+gamma)(k-N-1)
            set_g(s, -1, {ga, -N - 1});
            return s;
        };
        e.lattice = [P](const ParamMap& p, const Scalar& y) { return y * (y + P(p, "gamma") + P(p, "delta") + 1); };
        e.oracle = [P](const ParamMap& p, int n, const Scalar& y) {
            const Scalar &ga = P(p, "gamma"), &de = P(p, "delta"), &N = P(p, "N");
            return pfq({S(-n), -y, y + ga + de + 1}, {ga + 1, -N}, 1, n);
        };
        e.k_n = [P](const ParamMap& p, int n) {
            return some(Scalar(1) / (pochhammer(P(p, "gamma") + 1, n) * pochhammer(-P(p, "N"), n)));
        };
        e.prefactor = one;
        e.sample = [](std::mt19937& r) {
            return ParamMap{{"gamma", draw(r, 1, 4)}, {"delta", draw(r, 1, 4)}, {"N", draw(r, 2, 6)}};
        };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "continuous-hahn";
        e.acronym = "cH";
        e.full_name = "continuous Hahn";
        e.kls_tag = "4";
        e.params = {"a", "b", "c", "d"};
        e.degrees = DegreeTriple{1, 3, 2};
        e.node = NodeId::cH_H;
        e.build_q1 = [P](const ParamMap& p) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c"), &d = P(p, "d");
            SeqSpecQ1 s;
            s.b0 = I * a;
            s.b1 = I;
            s.a1 = a + b + c + d - 1;
            s.a2 = 1;
            set_g(s, I, {a + c - 1, a + d - 1});
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c"), &d = P(p, "d");
            return pfq({S(-n), S(n) + a + b + c + d - 1, a + I * x}, {a + c, a + d}, 1, n);
        };
        e.k_n = [P, fact](const ParamMap& p, int n) {
            Scalar s = P(p, "a") + P(p, "b") + P(p, "c") + P(p, "d");
            return some(pochhammer(S(n) + s - 1, n) / fact(n));
        };
        e.prefactor = [P, fact](const ParamMap& p, int n) {
            const Scalar &a = P(p, "a"), &c = P(p, "c"), &d = P(p, "d");
            return ipow(I, n) * pochhammer(a + c, n) * pochhammer(a + d, n) / fact(n);
        };
        e.sample = [](std::mt19937& r) {
            return ParamMap{{"a", draw(r, 1, 4)}, {"b", draw(r, 1, 4)}, {"c", draw(r, 1, 4)}, {"d", draw(r, 1, 4)}};
        };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "hahn";
        e.acronym = "H";
        e.full_name = "Hahn";
        e.kls_tag = "5";
        e.params = {"alpha", "beta", "N"};
        e.degrees = DegreeTriple{1, 3, 2};
        e.node = NodeId::cH_H;
        e.admissible = [](const ParamMap& p) { positive_int(p, "N"); };
        e.finite_N = [](const ParamMap& p) { return std::optional<int>(positive_int(p, "N")); };
        e.build_q1 = [P](const ParamMap& p) {
            const Scalar &al = P(p, "alpha"), &be = P(p, "beta"), &N = P(p, "N");
            SeqSpecQ1 s;
            s.b1 = 1;
            s.a1 = al + be + 1;
            s.a2 = 1;
            set_g(s, 1, {al, -N - 1});
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            const Scalar &al = P(p, "alpha"), &be = P(p, "beta"), &N = P(p, "N");
            return pfq({S(-n), S(n) + al + be + 1, -x}, {al + 1, -N}, 1, n);
        };
        e.k_n = [P](const ParamMap& p, int n) {
            const Scalar &al = P(p, "alpha"), &be = P(p, "beta"), &N = P(p, "N");
            return some(pochhammer(S(n) + al + be + 1, n) / (pochhammer(al + 1, n) * pochhammer(-N, n)));
        };
        e.prefactor = one;
        e.sample = [](std::mt19937& r) {
            return ParamMap{{"alpha", draw(r, 1, 4)}, {"beta", draw(r, 1, 4)}, {"N", draw(r, 2, 6)}};
        };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "meixner-pollaczek";
        e.acronym = "M-P";
        e.full_name = "Meixner-Pollaczek";
        e.kls_tag = "7";
        e.params = {"lambda", "t"};
        e.degrees = DegreeTriple{1, 2, 1};
        e.node = NodeId::MP_M_K;
        e.admissible = [P](const ParamMap& p) {
            const Scalar& t = P(p, "t");
            if (t.is_zero() || t == Scalar(1))
                throw inadmissible("t = e^{-2i phi} must differ from 0 and 1, got " + t.to_string());
        };
        e.build_q1 = [P](const ParamMap& p) {
            const Scalar &la = P(p, "lambda"), &t = P(p, "t");
            SeqSpecQ1 s;
            s.b0 = I * la;
            s.b1 = I;
            const Scalar m = -(I * (Scalar(1) - t));
            s.a0 = m * la;
            s.a1 = m;
            set_g(s, 1, {S(2) * la - 1});
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            const Scalar &la = P(p, "lambda"), &t = P(p, "t");
            return pfq({S(-n), la + I * x}, {S(2) * la}, Scalar(1) - t, n);
        };
        // 2^n sin^n(phi) / n! is not in Q(i).
        e.k_n = [](const ParamMap&, int) { return std::optional<Scalar>(); };
        e.prefactor = one;
        e.sample = [](std::mt19937& r) { return ParamMap{{"lambda", draw(r, 1, 4)}, {"t", draw(r, 2, 5)}}; };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "meixner";
        e.acronym = "M";
        e.full_name = "Meixner";
        e.kls_tag = "10";
        e.params = {"beta", "c"};
        e.degrees = DegreeTriple{1, 2, 1};
        e.node = NodeId::MP_M_K;
        e.admissible = [P](const ParamMap& p) {
            const Scalar& c = P(p, "c");
            if (c.is_zero() || c == Scalar(1))
                throw inadmissible("c must differ from 0 and 1, got " + c.to_string());
        };
        e.build_q1 = [P](const ParamMap& p) {
            SeqSpecQ1 s;
            s.b1 = 1;
            s.a1 = Scalar(1) - Scalar(1) / P(p, "c");
            set_g(s, 1, {P(p, "beta") - 1});
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            return pfq({S(-n), -x}, {P(p, "beta")}, Scalar(1) - Scalar(1) / P(p, "c"), n);
        };
        e.k_n = [P](const ParamMap& p, int n) {
            return some(ipow(Scalar(1) - Scalar(1) / P(p, "c"), n) / pochhammer(P(p, "beta"), n));
        };
        e.prefactor = one;
        e.sample = [](std::mt19937& r) { return ParamMap{{"beta", draw(r, 1, 5)}, {"c", draw(r, 2, 5)}}; };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "krawtchouk";
        e.acronym = "K";
        e.full_name = "Krawtchouk";
        e.kls_tag = "11";
        e.params = {"p", "N"};
        e.degrees = DegreeTriple{1, 2, 1};
        e.node = NodeId::MP_M_K;
        e.admissible = [](const ParamMap& p) {
            nonzero(p, "p");
            positive_int(p, "N");
        };
        e.finite_N = [](const ParamMap& p) { return std::optional<int>(positive_int(p, "N")); };
        e.build_q1 = [P](const ParamMap& p) {
            SeqSpecQ1 s;
            s.b1 = 1;
            s.a1 = Scalar(1) / P(p, "p");
            set_g(s, 1, {-P(p, "N") - 1});
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            return pfq({S(-n), -x}, {-P(p, "N")}, Scalar(1) / P(p, "p"), n);
        };
        e.k_n = [P](const ParamMap& p, int n) {
            return some(Scalar(1) / (ipow(P(p, "p"), n) * pochhammer(-P(p, "N"), n)));
        };
        e.prefactor = one;
        e.sample = [](std::mt19937& r) { return ParamMap{{"p", draw(r, 2, 5)}, {"N", draw(r, 2, 6)}}; };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "jacobi";
        e.acronym = "J";
        e.full_name = "Jacobi";
        e.kls_tag = "8";
        e.params = {"alpha", "beta"};
        e.degrees = DegreeTriple{0, 2, 2};
        e.node = NodeId::J;
        e.x_distinct = false;
        e.build_q1 = [P](const ParamMap& p) {
            const Scalar &al = P(p, "alpha"), &be = P(p, "beta");
            SeqSpecQ1 s;
            s.b0 = 1;
            s.a1 = (al + be + 1) * half();
            s.a2 = half();
            set_g(s, 1, {al});
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            const Scalar &al = P(p, "alpha"), &be = P(p, "beta");
            return pfq({S(-n), S(n) + al + be + 1}, {al + 1}, (Scalar(1) - x) * half(), n);
        };
        e.k_n = [P, fact](const ParamMap& p, int n) {
            return some(pochhammer(S(n) + P(p, "alpha") + P(p, "beta") + 1, n) / (ipow(S(2), n) * fact(n)));
        };
        e.prefactor = [P, fact](const ParamMap& p, int n) { return pochhammer(P(p, "alpha") + 1, n) / fact(n); };
        e.sample = [](std::mt19937& r) { return ParamMap{{"alpha", draw(r, 1, 4)}, {"beta", draw(r, 1, 4)}}; };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "charlier";
        e.acronym = "Ch";
        e.full_name = "Charlier";
        e.kls_tag = "14";
        e.params = {"a"};
        e.degrees = DegreeTriple{1, 1, 1};
        e.node = NodeId::Ch;
        e.admissible = [](const ParamMap& p) { nonzero(p, "a"); };
        e.build_q1 = [P](const ParamMap& p) {
            SeqSpecQ1 s;
            s.b1 = 1;
            s.a1 = -(Scalar(1) / P(p, "a"));
            s.d1 = 1;
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            return pfq({S(-n), -x}, {}, -(Scalar(1) / P(p, "a")), n);
        };
        e.k_n = [P](const ParamMap& p, int n) { return some(ipow(-P(p, "a"), -n)); };
        e.prefactor = one;
        e.sample = [](std::mt19937& r) { return ParamMap{{"a", draw(r, 1, 5)}}; };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "laguerre";
        e.acronym = "L";
        e.full_name = "Laguerre";
        e.kls_tag = "12";
        e.params = {"alpha"};
        e.degrees = DegreeTriple{0, 2, 1};
        e.node = NodeId::L;
        e.x_distinct = false;
        e.build_q1 = [P](const ParamMap& p) {
            SeqSpecQ1 s;
            s.a1 = -1;
            set_g(s, 1, {P(p, "alpha")});
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) { return pfq({S(-n)}, {P(p, "alpha") + 1}, x, n); };
        e.k_n = [fact](const ParamMap&, int n) { return some(ipow(S(-1), n) / fact(n)); };
        e.prefactor = [P, fact](const ParamMap& p, int n) { return pochhammer(P(p, "alpha") + 1, n) / fact(n); };
        e.sample = [](std::mt19937& r) { return ParamMap{{"alpha", draw(r, 1, 5)}}; };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "bessel";
        e.acronym = "B";
        e.full_name = "Bessel";
        e.kls_tag = "13";
        e.params = {"a"};
        e.degrees = DegreeTriple{0, 1, 2};
        e.node = NodeId::B;
        e.x_distinct = false;
        e.build_q1 = [P](const ParamMap& p) {
            SeqSpecQ1 s;
            s.a1 = (P(p, "a") + 1) * half();
            s.a2 = half();
            s.d1 = 1;
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            return pfq({S(-n), S(n) + P(p, "a") + 1}, {}, -(x * half()), n);
        };
        e.k_n = [P](const ParamMap& p, int n) {
            return some(pochhammer(S(n) + P(p, "a") + 1, n) / ipow(S(2), n));
        };
        e.prefactor = one;
        e.sample = [](std::mt19937& r) { return ParamMap{{"a", draw(r, 1, 5)}}; };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "binomial";
        e.acronym = "bin";
        e.full_name = "binomial";
        e.kls_tag = "degenerate";
        e.degrees = DegreeTriple{0, 1, 1};
        e.node = NodeId::bin;
        e.x_distinct = false;
        e.build_q1 = [](const ParamMap&) {
            SeqSpecQ1 s;
            s.a1 = -1;
            s.d1 = 1;
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [](const ParamMap&, int n, const Scalar& x) { return ipow(Scalar(1) - x, n); };
        e.k_n = [](const ParamMap&, int n) { return some(ipow(S(-1), n)); };
        e.prefactor = one;
        e.sample = [](std::mt19937&) { return ParamMap{}; };
        cat.push_back(std::move(e));
    }

    // q-families feeding the q -> 1 limits.
    auto q_admissible = [P](const ParamMap& p) {
        const Scalar& q = P(p, "q");
        if (q.is_zero() || q == Scalar(1) || q == Scalar(-1))
            throw inadmissible("q must differ from 0, 1 and -1, got " + q.to_string());
    };
    auto zlattice = [](const ParamMap&, const Scalar& z) { return z + Scalar(1) / z; };
    auto q_pick = [](std::mt19937& r) {
        static const Scalar qs[] = {Scalar(2), Scalar(3), Scalar::ratio(1, 2)};
        return qs[draw(r, 0, 2)];
    };
    // a^2 q^j != 1 for every q above, so x_k = a q^k + q^-k / a stays distinct
    auto a_pick = [](std::mt19937& r) {
        static const long as[] = {3, 5, 6, 7};
        return Scalar(as[draw(r, 0, 3)]);
    };
    {
        FamilyEntry e;
        e.id = "askey-wilson";
        e.acronym = "AW";
        e.full_name = "Askey-Wilson";
        e.kls_tag = "14.1";
        e.params = {"a", "b", "c", "d", "q"};
        e.is_q = true;
        e.bidegrees = BidegreeTriple{-1, 1, -2, 2, -1, 1};
        e.admissible = [P, q_admissible](const ParamMap& p) {
            q_admissible(p);
            for (const char* n : {"a", "b", "c", "d"})
                nonzero(p, n);
        };
        e.build_q = [P](const ParamMap& p) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c"), &d = P(p, "d"), &q = P(p, "q");
            const Scalar abcd_q = a * b * c * d / q;
            SeqSpecQ s;
            s.q = q;
            s.A(-1) = 1;
            s.A(0) = Scalar(-1) - abcd_q;
            s.A(1) = abcd_q;
            s.B(1) = a;
            s.B(-1) = Scalar(1) / a;
            // g_k = (q/a) Q^{-2} (1-(ab/q)Q)(1-(ac/q)Q)(1-(ad/q)Q)(1-Q), Q = q^k.
            std::vector<Scalar> poly{Scalar(1)};
            for (const Scalar& r : {a * b / q, a * c / q, a * d / q, Scalar(1)}) {
                std::vector<Scalar> next(poly.size() + 1);
                for (std::size_t i = 0; i < poly.size(); ++i) {
                    next[i] += poly[i];
                    next[i + 1] -= poly[i] * r;
                }
                poly = std::move(next);
            }
            for (int j = 0; j <= 4; ++j)
                s.D(j - 2) = q / a * poly[static_cast<std::size_t>(j)];
            return s;
        };
        e.lattice = zlattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& z) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &c = P(p, "c"), &d = P(p, "d"), &q = P(p, "q");
            return qphi({ipow(q, -n), a * b * c * d * ipow(q, n - 1), a * z, a / z}, {a * b, a * c, a * d}, q, q, n);
        };
        e.prefactor = one;
        e.sample = [q_pick, a_pick](std::mt19937& r) {
            return ParamMap{{"a", a_pick(r)}, {"b", draw(r, 2, 5)}, {"c", draw(r, 2, 5)},
                            {"d", draw(r, 2, 5)}, {"q", q_pick(r)}};
        };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "al-salam-chihara";
        e.acronym = "ASC";
        e.full_name = "Al-Salam-Chihara";
        e.kls_tag = "14.8";
        e.params = {"a", "b", "q"};
        e.is_q = true;
        e.bidegrees = BidegreeTriple{-1, 1, -2, 0, -1, 0};
        e.admissible = [P, q_admissible](const ParamMap& p) {
            q_admissible(p);
            nonzero(p, "a");
        };
        e.build_q = [P](const ParamMap& p) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &q = P(p, "q");
            SeqSpecQ s;
            s.q = q;
            s.A(-1) = 1;
            s.A(0) = -1;
            s.B(1) = a;
            s.B(-1) = Scalar(1) / a;
            s.D(-2) = q / a;
            s.D(-1) = -(q / a) - b;
            s.D(0) = b;
            return s;
        };
        e.lattice = zlattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& z) {
            const Scalar &a = P(p, "a"), &b = P(p, "b"), &q = P(p, "q");
            return qphi({ipow(q, -n), a * z, a / z}, {a * b, Scalar(0)}, q, q, n);
        };
        e.prefactor = one;
        e.sample = [q_pick, a_pick](std::mt19937& r) {
            return ParamMap{{"a", a_pick(r)}, {"b", draw(r, 2, 5)}, {"q", q_pick(r)}};
        };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "al-salam-carlitz-1";
        e.acronym = "ASC-I";
        e.full_name = "Al-Salam-Carlitz I";
        e.kls_tag = "14.24";
        e.params = {"a", "q"};
        e.is_q = true;
        e.bidegrees = BidegreeTriple{0, 1, -1, 0, -1, 0};
        e.admissible = [P, q_admissible](const ParamMap& p) {
            q_admissible(p);
            nonzero(p, "a");
        };
        e.build_q = [P](const ParamMap& p) {
            const Scalar &a = P(p, "a"), &q = P(p, "q");
            SeqSpecQ s;
            s.q = q;
            s.A(-1) = Scalar(1) / a;
            s.A(0) = -(Scalar(1) / a);
            s.B(1) = 1;
            s.D(-1) = -1;
            s.D(0) = 1;
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            const Scalar &a = P(p, "a"), &q = P(p, "q");
            return qphi({ipow(q, -n), Scalar(1) / x}, {Scalar(0)}, q, q * x / a, n);
        };
        e.prefactor = one;
        e.sample = [q_pick](std::mt19937& r) { return ParamMap{{"a", draw(r, 1, 5)}, {"q", q_pick(r)}}; };
        cat.push_back(std::move(e));
    }
    {
        FamilyEntry e;
        e.id = "stieltjes-wigert";
        e.acronym = "SW";
        e.full_name = "Stieltjes-Wigert";
        e.kls_tag = "14.27";
        e.params = {"q"};
        e.is_q = true;
        e.x_distinct = false;
        e.bidegrees = BidegreeTriple{0, 0, -1, 0, 0, 1};
        e.admissible = q_admissible;
        e.build_q = [P](const ParamMap& p) {
            const Scalar& q = P(p, "q");
            const Scalar inv = Scalar(1) / (Scalar(1) - q);
            SeqSpecQ s;
            s.q = q;
            s.A(0) = -inv;
            s.A(1) = inv;
            s.D(-1) = inv;
            s.D(0) = -inv;
            return s;
        };
        e.lattice = identity_lattice;
        e.oracle = [P](const ParamMap& p, int n, const Scalar& x) {
            const Scalar& q = P(p, "q");
            return qphi({ipow(q, -n)}, {Scalar(0)}, q, -(ipow(q, n + 1) * x), n);
        };
        e.prefactor = one;
        e.sample = [q_pick](std::mt19937& r) { return ParamMap{{"q", q_pick(r)}}; };
        cat.push_back(std::move(e));
    }
    return cat;
}

inline std::string fold_name(std::string_view s)
{
    std::string out;
    for (char c : s)
        out += c == '_' || c == ' ' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace detail

/// All registered families: the 14 q = 1 entries first, then the q-entries.
inline const std::vector<FamilyEntry>& catalog()
{
    static const std::vector<FamilyEntry> entries = detail::make_catalog();
    return entries;
}

/// Looks up a family by id or acronym ("W", "wilson", "cdH", ...). An exact
/// acronym wins; otherwise case is ignored ("Ch" is Charlier, "cH" continuous Hahn).
inline const FamilyEntry& find_family(std::string_view name)
{
    for (const auto& e : catalog())
        if (e.acronym == name)
            return e;
    const std::string key = detail::fold_name(name);
    for (const auto& e : catalog())
        if (e.id == key || detail::fold_name(e.acronym) == key)
            return e;
    throw Error(Errc::UnknownFamily, "no family named '" + std::string(name) + "'");
}

/// Accepts Greek letters and ASCII spellings for parameter names.
inline std::string canonical_param_name(std::string_view name)
{
    static const std::pair<std::string_view, std::string_view> aliases[] = {
        {"α", "alpha"}, {"β", "beta"}, {"γ", "gamma"}, {"δ", "delta"}, {"λ", "lambda"},
        {"al", "alpha"}, {"be", "beta"}, {"ga", "gamma"}, {"de", "delta"}, {"la", "lambda"},
    };
    for (const auto& [from, to] : aliases)
        if (name == from)
            return std::string(to);
    return std::string(name);
}

inline ParamMap canonical_params(const FamilyEntry& e, const ParamMap& raw)
{
    ParamMap out;
    for (const auto& [k, v] : raw) {
        std::string name = canonical_param_name(k);
        if (std::find(e.params.begin(), e.params.end(), name) == e.params.end())
            throw detail::inadmissible("family " + e.id + " has no parameter '" + k + "'");
        out[name] = v;
    }
    for (const auto& name : e.params)
        if (!out.count(name))
            throw detail::inadmissible("missing parameter '" + name + "' for family " + e.id);
    return out;
}

/// Builds the data triple of a family instance. Depth defaults to 12, or to
/// N+1 for the finite families. Checks admissibility, h-distinctness and
/// g_k != 0 up to the depth (up to N for finite families).
inline FamilyInstance build_family(const FamilyEntry& e, const ParamMap& raw, std::optional<int> depth = std::nullopt)
{
    ParamMap p = canonical_params(e, raw);
    if (e.admissible)
        e.admissible(p);
    std::optional<int> N = e.finite_N ? e.finite_N(p) : std::nullopt;
    const int K = depth ? *depth : N ? *N + 1 : kDefaultDepth;
    std::optional<SeqSpecQ1> q1;
    std::optional<SeqSpecQ> q;
    if (e.is_q)
        q = e.build_q(p);
    else
        q1 = e.build_q1(p);
    auto make = [&] {
        try {
            return e.is_q ? q->triple(K) : q1->triple(K);
        } catch (const Error& err) {
            if (err.code() == Errc::CollidingEigenvalues || err.code() == Errc::InvalidSpec)
                throw detail::inadmissible("h_k distinct up to depth " + std::to_string(K) + ": " + err.detail());
            throw;
        }
    };
    TripleData<Scalar> t = make();
    const int g_end = N ? std::min(*N, K) : K;
    for (int k = 1; k <= g_end; ++k)
        if (t.g(k).is_zero())
            throw detail::inadmissible("g_k != 0 for 1 <= k <= " + std::to_string(g_end) + ": g_" +
                                       std::to_string(k) + " = 0");
    return {&e, std::move(p), std::move(q1), std::move(q), std::move(t), N};
}

inline FamilyInstance build_family(std::string_view name, const ParamMap& params,
                                   std::optional<int> depth = std::nullopt)
{
    return build_family(find_family(name), params, depth);
}

/// Draws integer parameters until the instance builds at a generic point of
/// its scheme node.
inline FamilyInstance sample_family(const FamilyEntry& e, std::mt19937& rng, std::optional<int> depth = std::nullopt)
{
    for (int attempt = 0; attempt < 200; ++attempt) {
        try {
            FamilyInstance inst = build_family(e, e.sample(rng), depth);
            // skip points where an extra uniform parameter vanishes
            if (inst.q1 && e.node && vanishing_pattern(normalize_uniform(*inst.q1)) !=
                                         scheme_graph().node(*e.node).vanishing)
                continue;
            return inst;
        } catch (const Error& err) {
            if (err.code() != Errc::InadmissibleParameters && err.code() != Errc::NotNormalizable)
                throw;
        }
    }
    throw detail::inadmissible("no admissible sample found for " + e.id);
}

/// The family's standard hypergeometric series in its native variable y,
/// summed directly. It equals U_n at x = lattice_point(y).
inline Scalar kls_oracle(const FamilyEntry& e, const ParamMap& params, int n, const Scalar& y)
{
    if (!e.oracle)
        throw Error(Errc::OracleUnavailable, "no oracle for " + e.id);
    return e.oracle(canonical_params(e, params), n, y);
}

inline Scalar kls_oracle(std::string_view name, const ParamMap& params, int n, const Scalar& y)
{
    return kls_oracle(find_family(name), params, n, y);
}

inline Scalar lattice_point(const FamilyEntry& e, const ParamMap& params, const Scalar& y)
{
    return e.lattice ? e.lattice(canonical_params(e, params), y) : y;
}

/// Fixed evaluation points for the oracle checks (native variable).
inline const std::vector<Scalar>& oracle_points()
{
    static const std::vector<Scalar> pts{Scalar::ratio(1, 3), Scalar(Rational(2), make_rational(1, 5)),
                                         Scalar::ratio(-7, 4)};
    return pts;
}

namespace detail {

template <class Fn>
void run_check(Report& r, const std::string& name, Fn&& fn)
{
    try {
        fn();
    } catch (const std::exception& e) {
        r.error(name, e);
    }
}

} // namespace detail

/// Constraints, degree label, monicity, eigen-identity, TTRR, duality,
/// oracle agreement, normalization and scheme placement for one instance.
/// `perturb` names a q = 1 coefficient that is increased by 1 before the
/// data are built. Errors are recorded in the report, never thrown.
inline Report verify_family(const FamilyEntry& e, const ParamMap& params, int n_max,
                            const std::optional<std::string>& perturb = std::nullopt)
{
    Report r;
    std::optional<FamilyInstance> inst;
    try {
        inst = build_family(e, params);
    } catch (const std::exception& ex) {
        r.error("build", ex);
        return r;
    }
    std::optional<TripleData<Scalar>> perturbed;
    if (perturb) {
        try {
            if (!inst->q1)
                throw Error(Errc::InvalidSpec, "--perturb applies to q = 1 families");
            SeqSpecQ1 s = *inst->q1;
            s.coeff(*perturb) += Scalar(1);
            inst->q1 = s;
            perturbed = s.triple(inst->data.depth());
        } catch (const std::exception& ex) {
            r.error("perturb", ex);
            return r;
        }
    }
    const TripleData<Scalar>& t = perturbed ? *perturbed : inst->data;
    const int top = std::min(n_max, inst->max_degree());
    r.add("build", Status::Pass,
          "depth=" + std::to_string(t.depth()) +
              (inst->finite_N ? " finite N=" + std::to_string(*inst->finite_N) + " (n capped at N)" : ""));

    detail::run_check(r, "constraints", [&] {
        bool ok = inst->q1 ? check_q1_constraints(*inst->q1) : check_q_constraints(*inst->q);
        r.expect("constraints", ok, inst->q1 ? "d3 = a1 b2 + a2 b1 - 2 a2 b2, d4 = a2 b2" : "d2 = a1 b1/q, d-2 = q a-1 b-1");
    });
    detail::run_check(r, "degree_triple", [&] {
        if (inst->q1) {
            DegreeTriple got = degree_triple(*inst->q1);
            r.expect("degree_triple", got == *e.degrees, got.to_string());
        } else {
            BidegreeTriple got = bidegree_triple(*inst->q);
            r.expect("degree_triple", got == *e.bidegrees, got.to_string());
        }
    });
    detail::run_check(r, "monic", [&] {
        for (int n = 0; n <= top; ++n)
            if (!(monic_u(t, n).leading() == Scalar(1)) || monic_u(t, n).degree() != n) {
                r.expect("monic", false, "n=" + std::to_string(n));
                return;
            }
        r.expect("monic", true, "n<=" + std::to_string(top));
    });
    detail::run_check(r, "eigen", [&] {
        for (int n = 0; n <= top; ++n)
            if (!verify_eigen(t, n)) {
                r.expect("eigen", false, "L u_n != h_n u_n at n=" + std::to_string(n));
                return;
            }
        r.expect("eigen", true, "n<=" + std::to_string(top));
    });
    detail::run_check(r, "ttrr", [&] {
        const int last = std::min(top, t.depth() - 2);
        for (int n = 1; n <= last; ++n) {
            Poly<Scalar> res = verify_ttrr(t, n);
            if (!res.is_zero()) {
                r.expect("ttrr", false, "n=" + std::to_string(n) + " residual " + to_string(res));
                return;
            }
        }
        r.expect("ttrr", true, "1<=n<=" + std::to_string(last));
    });
    detail::run_check(r, "duality", [&] {
        try {
            dualize(t);
        } catch (const Error& err) {
            if (err.code() == Errc::DualNotDefined && !e.x_distinct) {
                r.add("duality", Status::Pass, "DualNotDefined (expected, " + err.detail() + ")");
                return;
            }
            throw;
        }
        const int m_top = std::min(top, 6);
        for (int n = 0; n <= m_top; ++n)
            for (int m = 0; m <= m_top; ++m)
                if (!dual_identity_check(t, n, m)) {
                    r.expect("duality", false, "U_n(x_m) != dual U_m(h_n) at n=" + std::to_string(n) +
                                                   " m=" + std::to_string(m));
                    return;
                }
        r.expect("duality", true, "0<=n,m<=" + std::to_string(m_top));
    });
    detail::run_check(r, "oracle", [&] {
        if (!e.oracle) {
            r.add("oracle", Status::Pass, "OracleUnavailable");
            return;
        }
        const int o_top = std::min(top, 6);
        for (const Scalar& y : oracle_points()) {
            const Scalar x = e.lattice(inst->params, y);
            for (int n = 0; n <= o_top; ++n) {
                Scalar u = hypergeometric_U(t, n, x), o = e.oracle(inst->params, n, y);
                if (!(u == o)) {
                    r.expect("oracle", false, "n=" + std::to_string(n) + " y=" + y.to_string() + ": U_n=" +
                                                  u.to_string() + " series=" + o.to_string());
                    return;
                }
            }
        }
        r.expect("oracle", true, "n<=" + std::to_string(o_top) + " at 3 points");
    });
    if (e.k_n) {
        detail::run_check(r, "normalization", [&] {
            if (!e.k_n(inst->params, 0)) {
                r.add("normalization", Status::Pass, "k_n not in Q(i), skipped");
                return;
            }
            for (const Scalar& y : oracle_points()) {
                const Scalar x = e.lattice(inst->params, y);
                for (int n = 0; n <= std::min(top, 6); ++n) {
                    Scalar lhs = *e.k_n(inst->params, n) * monic_u(t, n)(x);
                    Scalar rhs = e.prefactor(inst->params, n) * e.oracle(inst->params, n, y);
                    if (!(lhs == rhs)) {
                        r.expect("normalization", false, "k_n u_n != standard form at n=" + std::to_string(n));
                        return;
                    }
                }
            }
            r.expect("normalization", true, "k_n u_n matches the standard form");
        });
    }
    if (inst->q1 && e.node) {
        detail::run_check(r, "classify", [&] {
            NodeId got = classify_spec(*inst->q1);
            r.expect("classify", got == *e.node, "node=" + std::string(node_label(got)));
        });
    }
    return r;
}

inline Report verify_family(std::string_view name, const ParamMap& params, int n_max,
                            const std::optional<std::string>& perturb = std::nullopt)
{
    try {
        return verify_family(find_family(name), params, n_max, perturb);
    } catch (const std::exception& ex) {
        Report r;
        r.error("build", ex);
        return r;
    }
}

/// Parameters used when a family is verified without explicit values.
inline ParamMap default_params(const FamilyEntry& e)
{
    static const std::map<std::string, ParamMap> defaults{
        {"wilson", {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}},
        {"racah", {{"alpha", -6}, {"beta", 7}, {"gamma", 1}, {"delta", 1}}},
        {"continuous-dual-hahn", {{"a", 1}, {"b", 2}, {"c", 3}}},
        {"dual-hahn", {{"gamma", 1}, {"delta", 2}, {"N", 5}}},
        {"continuous-hahn", {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}},
        {"hahn", {{"alpha", 1}, {"beta", 1}, {"N", 5}}},
        {"meixner-pollaczek", {{"lambda", 1}, {"t", 2}}},
        {"meixner", {{"beta", 2}, {"c", 3}}},
        {"krawtchouk", {{"p", 3}, {"N", 5}}},
        {"jacobi", {{"alpha", 1}, {"beta", 2}}},
        {"charlier", {{"a", 1}}},
        {"laguerre", {{"alpha", 2}}},
        {"bessel", {{"a", 1}}},
        {"binomial", {}},
        {"askey-wilson", {{"a", 2}, {"b", 3}, {"c", 4}, {"d", 5}, {"q", 2}}},
        {"al-salam-chihara", {{"a", 2}, {"b", 3}, {"q", 2}}},
        {"al-salam-carlitz-1", {{"a", 2}, {"q", 2}}},
        {"stieltjes-wigert", {{"q", 2}}},
    };
    auto it = defaults.find(e.id);
    return it == defaults.end() ? ParamMap{} : it->second;
}

/// The 14 q = 1 families at their default parameters, in registry order.
inline Report verify_all_catalog(int n_max)
{
    Report r;
    for (const auto& e : catalog())
        if (!e.is_q)
            r.merge(verify_family(e, default_params(e), n_max), e.id);
    return r;
}

} // namespace askeyvs

#endif
