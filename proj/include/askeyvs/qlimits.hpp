#ifndef ASKEYVS_QLIMITS_HPP
#define ASKEYVS_QLIMITS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "ratfun.hpp"
#include "report.hpp"
#include "scalar.hpp"

namespace askeyvs {

/// Data h_k, x_k, g_k (k = 0..K) as rational functions of s, where q = s^2.
struct QDataSymbolic {
    std::vector<RatFun> h, x, g;

    int depth() const { return static_cast<int>(h.size()) - 1; }

    TripleData<RatFun> triple() const { return TripleData<RatFun>(h, x, g); }
};

/// x -> rho_x x + sigma_x, h -> rho_h h + sigma_h, g -> rho_x rho_h g.
struct Rescaling {
    RatFun rho_x{1}, sigma_x{0}, rho_h{1}, sigma_h{0};
};

struct LimitValues {
    Scalar h, x, g;
};

/// A q -> 1 limit from a q-family to a q = 1 catalog family.
struct LimitCase {
    std::string name;    // "asc1-to-charlier"
    std::string source;  // catalog id or descriptive name for the stretch rows
    std::string target;  // catalog id
    std::vector<std::string> params;
    ParamMap defaults;
    BidegreeTriple source_bidegree;
    /// Whether deg = deg_+ - deg_- reproduces the target degree triple.
    bool bidegree_rule_holds = true;
    bool builtin = false;

    std::function<QDataSymbolic(const ParamMap&, int)> source_data;
    std::function<Rescaling(const ParamMap&)> rescaling;
    std::function<ParamMap(const ParamMap&)> target_params;
    /// Common multiplier c on h and g and translation c*shift on h, applied
    /// to the limit before comparing with the catalog target.
    std::function<std::pair<Scalar, Scalar>(const ParamMap&)> alignment;
};

/// s^m as a rational function.
inline RatFun spow(long m)
{
    RatFun p = RatFun::from_poly(DenseUniPoly::monomial(Scalar(1), static_cast<int>(m < 0 ? -m : m), 's'));
    return m < 0 ? RatFun(1) / p : p;
}

/// q^m = s^{2m}.
inline RatFun qpow(long m) { return spow(2 * m); }

/// Value at s = 1 (q = 1) after cancellation; PoleAtQ1 if none exists.
inline Scalar limit_value(const RatFun& f)
{
    try {
        return f(Scalar(1));
    } catch (const Error& e) {
        if (e.code() == Errc::PoleAtPoint)
            throw Error(Errc::PoleAtQ1, "pole at q = 1 in " + f.to_string());
        throw;
    }
}

inline LimitValues limit_q_to_1(const QDataSymbolic& d, int k)
{
    if (k < 0 || k > d.depth())
        throw Error(Errc::DepthExceeded, "limit_q_to_1 k=" + std::to_string(k));
    const auto i = static_cast<std::size_t>(k);
    return {limit_value(d.h[i]), limit_value(d.x[i]), limit_value(d.g[i])};
}

inline QDataSymbolic apply_rescaling(const QDataSymbolic& d, const Rescaling& r)
{
    QDataSymbolic out;
    const RatFun rg = r.rho_x * r.rho_h;
    for (int k = 0; k <= d.depth(); ++k) {
        const auto i = static_cast<std::size_t>(k);
        out.h.push_back(r.rho_h * d.h[i] + r.sigma_h);
        out.x.push_back(r.rho_x * d.x[i] + r.sigma_x);
        out.g.push_back(rg * d.g[i]);
    }
    return out;
}

namespace detail {

inline long integer_exponent(const ParamMap& p, const std::string& name)
{
    const Scalar& v = param(p, name);
    auto n = v.to_long();
    if (!n || *n < -10000 || *n > 10000)
        throw Error(Errc::NonIntegerExponent, name + " enters as q^" + name + " and must be an integer, got " +
                                                  v.to_string());
    return *n;
}

inline RatFun one_minus(const RatFun& f) { return RatFun(1) - f; }

inline std::vector<LimitCase> make_limit_cases()
{
    std::vector<LimitCase> cases;
    const RatFun q = qpow(1);
    const RatFun omq = one_minus(q); // 1 - q

    {
        LimitCase c;
        c.name = "aw-to-wilson";
        c.source = "askey-wilson";
        c.target = "wilson";
        c.params = {"a", "b", "c", "d"};
        c.defaults = {{"a", 2}, {"b", 4}, {"c", 6}, {"d", 8}};
        c.source_bidegree = {-1, 1, -2, 2, -1, 1};
        c.builtin = true;
        // Parameters q^a, q^b, q^c, q^d.
        c.source_data = [](const ParamMap& p, int K) {
            const long a = integer_exponent(p, "a"), b = integer_exponent(p, "b"), cc = integer_exponent(p, "c"),
                       d = integer_exponent(p, "d");
            QDataSymbolic out;
            for (int k = 0; k <= K; ++k) {
                out.h.push_back(qpow(-k) * one_minus(qpow(k)) * one_minus(qpow(a + b + cc + d + k - 1)));
                out.x.push_back(qpow(a + k) + qpow(-a - k));
                out.g.push_back(qpow(-a - 2 * k + 1) * one_minus(qpow(a + b + k - 1)) * one_minus(qpow(a + cc + k - 1)) *
                                one_minus(qpow(a + d + k - 1)) * one_minus(qpow(k)));
            }
            return out;
        };
        // x -> (2 - x)/(1-q)^2, h -> -h/(1-q)^2.
        c.rescaling = [omq](const ParamMap&) {
            const RatFun inv2 = RatFun(1) / (omq * omq);
            return Rescaling{-inv2, RatFun(2) * inv2, -inv2, RatFun(0)};
        };
        c.target_params = [](const ParamMap& p) { return p; };
        cases.push_back(std::move(c));
    }
    {
        LimitCase c;
        c.name = "asc-to-meixner-pollaczek";
        c.source = "al-salam-chihara";
        c.target = "meixner-pollaczek";
        c.params = {"lambda", "w"};
        c.defaults = {{"lambda", 1}, {"w", 2}};
        c.source_bidegree = {-1, 1, -2, 0, -1, 0};
        c.bidegree_rule_holds = false;
        c.builtin = true;
        // a = q^lambda w, b = q^lambda / w with w = e^{-i phi}.
        c.source_data = [](const ParamMap& p, int K) {
            const long la = integer_exponent(p, "lambda");
            const Scalar& w = param(p, "w");
            const RatFun A = qpow(la) * RatFun(w);
            const RatFun AB = qpow(2 * la);
            QDataSymbolic out;
            for (int k = 0; k <= K; ++k) {
                out.h.push_back(qpow(-k) - RatFun(1));
                out.x.push_back(A * qpow(k) + RatFun(1) / (A * qpow(k)));
                out.g.push_back(qpow(-2 * k + 1) / A * one_minus(AB * qpow(k - 1)) * one_minus(qpow(k)));
            }
            return out;
        };
        // x -> (x - (w + 1/w)) / ((1-q) i (w - 1/w)), h -> h/(1-q).
        c.rescaling = [omq](const ParamMap& p) {
            const Scalar& w = param(p, "w");
            const Scalar winv = Scalar(1) / w;
            const RatFun rx = RatFun(1) / (omq * RatFun(Scalar::i() * (w - winv)));
            return Rescaling{rx, -(rx * RatFun(w + winv)), RatFun(1) / omq, RatFun(0)};
        };
        c.target_params = [](const ParamMap& p) {
            const Scalar& w = param(p, "w");
            return ParamMap{{"lambda", param(p, "lambda")}, {"t", w * w}};
        };
        // The limit is h = k, g = k(2 lambda+k-1)/(i(t-1)); the catalog uses
        // i(t-1) times that, with h translated by i(t-1) lambda.
        c.alignment = [](const ParamMap& p) {
            const Scalar& w = param(p, "w");
            const Scalar m = Scalar::i() * (w * w - Scalar(1));
            return std::pair{m, param(p, "lambda")};
        };
        cases.push_back(std::move(c));
    }
    {
        LimitCase c;
        c.name = "asc1-to-charlier";
        c.source = "al-salam-carlitz-1";
        c.target = "charlier";
        c.params = {"a"};
        c.defaults = {{"a", 1}};
        c.source_bidegree = {0, 1, -1, 0, -1, 0};
        c.builtin = true;
        // Source parameter -(1-q) a.
        c.source_data = [omq](const ParamMap& p, int K) {
            const Scalar& a = param(p, "a");
            if (a.is_zero())
                throw inadmissible("a != 0");
            const RatFun a_src = -(omq * RatFun(a));
            QDataSymbolic out;
            for (int k = 0; k <= K; ++k) {
                out.h.push_back(-(one_minus(qpow(-k)) / a_src));
                out.x.push_back(qpow(k));
                out.g.push_back(one_minus(qpow(-k)));
            }
            return out;
        };
        // x -> (1 - x)/(1-q).
        c.rescaling = [omq](const ParamMap&) {
            const RatFun inv = RatFun(1) / omq;
            return Rescaling{-inv, inv, RatFun(1), RatFun(0)};
        };
        c.target_params = [](const ParamMap& p) { return p; };
        cases.push_back(std::move(c));
    }
    {
        LimitCase c;
        c.name = "sw-to-binomial";
        c.source = "stieltjes-wigert";
        c.target = "binomial";
        c.source_bidegree = {0, 0, -1, 0, 0, 1};
        c.builtin = true;
        c.source_data = [omq](const ParamMap&, int K) {
            QDataSymbolic out;
            for (int k = 0; k <= K; ++k) {
                out.h.push_back(-(one_minus(qpow(k)) / omq));
                out.x.push_back(RatFun(0));
                out.g.push_back(-(one_minus(qpow(-k)) / omq));
            }
            return out;
        };
        c.rescaling = [](const ParamMap&) { return Rescaling{}; };
        c.target_params = [](const ParamMap&) { return ParamMap{}; };
        cases.push_back(std::move(c));
    }

    // Remaining rows of the limit list; no rescaling is given for them.
    const std::vector<std::tuple<std::string, std::string, std::string, BidegreeTriple>> stretch{
        {"q-racah-to-racah", "q-Racah", "racah", {-1, 1, -2, 2, -1, 1}},
        {"dual-q-hahn-to-dual-hahn", "(continuous) dual q-Hahn", "dual-hahn", {-1, 1, -2, 1, -1, 0}},
        {"q-hahn-to-hahn", "q-Hahn", "hahn", {-1, 0, -2, 1, -1, 1}},
        {"q-meixner-to-meixner", "q^{-1}-Meixner", "meixner", {0, 1, -1, 1, -1, 0}},
        {"affine-q-krawtchouk-to-krawtchouk", "affine q-Krawtchouk", "krawtchouk", {-1, 0, -2, 1, -1, 0}},
        {"little-q-jacobi-to-jacobi", "little q-Jacobi", "jacobi", {-1, 0, -2, 0, -1, 1}},
        {"q-charlier-to-charlier", "q^{-1}-Charlier", "charlier", {0, 1, 0, 1, -1, 0}},
        {"little-q-laguerre-to-laguerre", "little q-Laguerre", "laguerre", {0, 0, -1, 1, -1, 0}},
        {"q-bessel-to-bessel", "q-Bessel", "bessel", {0, 1, 1, 2, -1, 1}},
        {"q-binomial-to-binomial", "q-binomial", "binomial", {0, 0, -1, 0, -1, 0}},
    };
    for (const auto& [name, source, target, bideg] : stretch) {
        LimitCase c;
        c.name = name;
        c.source = source;
        c.target = target;
        c.source_bidegree = bideg;
        cases.push_back(std::move(c));
    }
    return cases;
}

} // namespace detail

inline const std::vector<LimitCase>& limit_cases()
{
    static const std::vector<LimitCase> cases = detail::make_limit_cases();
    return cases;
}

inline const LimitCase& find_limit_case(std::string_view name)
{
    const std::string key = detail::fold_name(name);
    for (const auto& c : limit_cases())
        if (c.name == key)
            return c;
    throw Error(Errc::UnknownLimitCase, "no limit case named '" + std::string(name) + "'");
}

namespace detail {

inline void require_builtin(const LimitCase& c)
{
    if (!c.builtin)
        throw Error(Errc::UnknownLimitCase, c.name + " is registered without a rescaling");
}

inline ParamMap limit_params(const LimitCase& c, const ParamMap& given)
{
    ParamMap p = c.defaults;
    for (const auto& [k, v] : given) {
        std::string name = canonical_param_name(k);
        if (std::find(c.params.begin(), c.params.end(), name) == c.params.end())
            throw inadmissible("limit case " + c.name + " has no parameter '" + k + "'");
        p[name] = v;
    }
    return p;
}

} // namespace detail

/// Source q-data of the case before rescaling.
inline QDataSymbolic source_qdata(const LimitCase& c, const ParamMap& params, int K)
{
    detail::require_builtin(c);
    return c.source_data(detail::limit_params(c, params), K);
}

/// Rescaled data in s, whose values at s = 1 are the limit data.
inline QDataSymbolic rescale_qdata(const LimitCase& c, const ParamMap& params, int K)
{
    detail::require_builtin(c);
    const ParamMap p = detail::limit_params(c, params);
    return apply_rescaling(c.source_data(p, K), c.rescaling(p));
}

inline QDataSymbolic rescale_qdata(std::string_view name, const ParamMap& params, int K)
{
    return rescale_qdata(find_limit_case(name), params, K);
}

/// Limits of the rescaled data for k <= K against the target family's data,
/// the bidegree -> degree arithmetic, and (for Askey-Wilson) the degenerate
/// limit of the unrescaled eigenvalues.
inline Report certify_limit(const LimitCase& c, const ParamMap& params, int K)
{
    Report r;
    std::optional<QDataSymbolic> d;
    std::optional<FamilyInstance> target;
    ParamMap p;
    try {
        detail::require_builtin(c);
        p = detail::limit_params(c, params);
        d = apply_rescaling(c.source_data(p, K), c.rescaling(p));
        target = build_family(c.target, c.target_params(p), K);
    } catch (const std::exception& e) {
        r.error("setup", e);
        return r;
    }
    Scalar mult(1), shift(0);
    if (c.alignment)
        std::tie(mult, shift) = c.alignment(p);
    for (const char* which : {"h", "x", "g"}) {
        const std::string name = std::string("limit_") + which;
        detail::run_check(r, name, [&] {
            for (int k = 0; k <= K; ++k) {
                LimitValues v = limit_q_to_1(*d, k);
                Scalar got, want;
                switch (which[0]) {
                case 'h':
                    got = mult * (v.h + shift);
                    want = target->data.h(k);
                    break;
                case 'x':
                    got = v.x;
                    want = target->data.x(k);
                    break;
                default:
                    got = mult * v.g;
                    want = target->data.g(k);
                }
                if (!(got == want)) {
                    r.expect(name, false, "MismatchAt(k=" + std::to_string(k) + ", " + which + "): limit=" +
                                              got.to_string() + " target=" + want.to_string());
                    return;
                }
            }
            r.expect(name, true, "k<=" + std::to_string(K) + " equals " + c.target + " data");
        });
    }
    detail::run_check(r, "bidegree", [&] {
        const DegreeTriple naive = degree_from_bidegree(c.source_bidegree);
        const DegreeTriple want = *find_family(c.target).degrees;
        const bool holds = naive == want;
        std::string detail = c.source_bidegree.to_string() + " -> " + naive.to_string();
        if (!holds)
            detail += ", target " + want.to_string();
        if (holds != c.bidegree_rule_holds)
            r.expect("bidegree", false, detail);
        else
            r.expect("bidegree", true, holds ? detail : detail + " (registered exception)");
    });
    if (c.name == "aw-to-wilson") {
        detail::run_check(r, "unrescaled_h", [&] {
            QDataSymbolic raw = c.source_data(p, K);
            for (int k = 0; k <= K; ++k)
                if (!limit_value(raw.h[static_cast<std::size_t>(k)]).is_zero()) {
                    r.expect("unrescaled_h", false, "h_" + std::to_string(k) + " does not tend to 0");
                    return;
                }
            r.expect("unrescaled_h", true, "unrescaled h_k -> 0 for k<=" + std::to_string(K));
        });
    }
    return r;
}

inline Report certify_limit(std::string_view name, const ParamMap& params, int K)
{
    try {
        return certify_limit(find_limit_case(name), params, K);
    } catch (const std::exception& e) {
        Report r;
        r.error("setup", e);
        return r;
    }
}

} // namespace askeyvs

#endif
