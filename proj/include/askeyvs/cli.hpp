#ifndef ASKEYVS_CLI_HPP
#define ASKEYVS_CLI_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalog.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "qlimits.hpp"
#include "report.hpp"
#include "scheme_graph.hpp"
#include "spec_document.hpp"
#include "spectral.hpp"

namespace askeyvs {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// "k=v,k=v" -> map; Greek names and short aliases are canonicalized.
inline ParamMap parse_param_list(std::string_view text)
{
    ParamMap out;
    std::string item;
    auto flush = [&] {
        std::string t = detail::trim(item);
        item.clear();
        if (t.empty())
            return;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::ParseError, "parameter '" + t + "' is not of the form name=value");
        std::string key = detail::trim(t.substr(0, eq));
        std::string value = detail::trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error(Errc::ParseError, "parameter '" + t + "' is not of the form name=value");
        try {
            out[canonical_param_name(key)] = Scalar::parse(value);
        } catch (const Error& e) {
            throw Error(Errc::ParseError, "parameter '" + key + "': " + e.detail());
        }
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else
            item += c;
    }
    flush();
    return out;
}

namespace detail {

inline bool is_usage_error(Errc c)
{
    return c == Errc::ParseError || c == Errc::UnknownFamily || c == Errc::UnknownLimitCase ||
           c == Errc::InvalidSpec || c == Errc::InadmissibleParameters;
}

struct CliInput {
    std::string family, params, spec;
};

inline SpecDocument input_document(const CliInput& in)
{
    if (!in.spec.empty() && !in.family.empty())
        throw Error(Errc::ParseError, "give either --spec or --family, not both");
    if (!in.spec.empty())
        return read_spec_document(in.spec);
    if (in.family.empty())
        throw Error(Errc::ParseError, "one of --spec or --family is required");
    SpecDocument doc;
    doc.family = in.family;
    doc.params = parse_param_list(in.params);
    const FamilyEntry& e = find_family(doc.family);
    if (in.params.empty())
        doc.params = default_params(e);
    return doc;
}

/// Checks for a raw coefficient document.
inline Report verify_realized(const RealizedSpec& rs, int n_max)
{
    Report r;
    const TripleData<Scalar>& t = rs.data;
    const int top = std::min(n_max, t.depth() - 1);
    r.add("build", Status::Pass, "depth=" + std::to_string(t.depth()));
    run_check(r, "constraints", [&] {
        if (rs.q1) {
            const SeqSpecQ1& s = *rs.q1;
            const Scalar d3 = s.a1 * s.b2 + s.a2 * s.b1 - Scalar(2) * s.a2 * s.b2, d4 = s.a2 * s.b2;
            r.expect("constraints", check_q1_constraints(s),
                     "d3=" + s.d3.to_string() + " (needs " + d3.to_string() + "), d4=" + s.d4.to_string() +
                         " (needs " + d4.to_string() + ")");
        } else {
            const SeqSpecQ& s = *rs.q;
            r.expect("constraints", check_q_constraints(s),
                     "d2=" + s.D(2).to_string() + " (needs " + (s.A(1) * s.B(1) / s.q).to_string() + "), d-2=" +
                         s.D(-2).to_string() + " (needs " + (s.q * s.A(-1) * s.B(-1)).to_string() + ")");
        }
    });
    run_check(r, "degree_triple", [&] {
        r.add("degree_triple", Status::Pass,
              rs.q1 ? degree_triple(*rs.q1).to_string() : bidegree_triple(*rs.q).to_string());
    });
    run_check(r, "eigen", [&] {
        for (int n = 0; n <= top; ++n)
            if (!verify_eigen(t, n)) {
                r.expect("eigen", false, "n=" + std::to_string(n));
                return;
            }
        r.expect("eigen", true, "n<=" + std::to_string(top));
    });
    run_check(r, "ttrr", [&] {
        const int last = std::min(n_max, t.depth() - 2);
        for (int n = 1; n <= last; ++n) {
            Poly<Scalar> res = verify_ttrr(t, n);
            if (!res.is_zero()) {
                r.expect("ttrr", false, "n=" + std::to_string(n) + " residual " + to_string(res));
                return;
            }
        }
        r.expect("ttrr", true, "1<=n<=" + std::to_string(last));
    });
    run_check(r, "duality", [&] {
        try {
            dualize(t);
        } catch (const Error& e) {
            if (e.code() == Errc::DualNotDefined) {
                r.add("duality", Status::Pass, "DualNotDefined (" + e.detail() + ")");
                return;
            }
            throw;
        }
        const int m_top = std::min(top, 6);
        for (int n = 0; n <= m_top; ++n)
            for (int m = 0; m <= m_top; ++m)
                if (!dual_identity_check(t, n, m)) {
                    r.expect("duality", false, "n=" + std::to_string(n) + " m=" + std::to_string(m));
                    return;
                }
        r.expect("duality", true, "0<=n,m<=" + std::to_string(m_top));
    });
    if (rs.q1) {
        run_check(r, "classify", [&] {
            NodeId id = classify_spec(*rs.q1);
            r.add("classify", Status::Pass, "node=" + std::string(node_label(id)));
        });
    }
    return r;
}

inline int cmd_construct(const CliInput& in, int n, std::ostream& out)
{
    const RealizedSpec rs = realize(input_document(in));
    const TripleData<Scalar>& t = rs.data;
    if (n < 0 || n > t.depth() - 1)
        throw Error(Errc::DepthExceeded, "n=" + std::to_string(n) + " exceeds depth " + std::to_string(t.depth()));
    out << "u_" << n << " = " << to_string(monic_u(t, n)) << '\n';
    try {
        out << "U_" << n << " = " << hypergeometric_factor(t, n).to_string() << " * u_" << n << '\n';
    } catch (const Error& e) {
        out << "U_" << n << " undefined: " << e.what() << '\n';
    }
    out << "k A_k B_k\n";
    for (int k = 0; k <= n && k + 1 <= t.depth(); ++k) {
        RecurrenceCoeffs<Scalar> c = recurrence(t, k);
        out << k << ' ' << c.A.to_string() << ' ' << (c.B ? c.B->to_string() : "-") << '\n';
    }
    return kExitPass;
}

inline int cmd_classify(const CliInput& in, std::ostream& out)
{
    const SpecDocument doc = input_document(in);
    std::optional<SeqSpecQ1> q1;
    std::optional<SeqSpecQ> q;
    if (doc.kind == SpecDocument::Kind::Family) {
        FamilyInstance inst = build_family(doc.family, doc.params, doc.depth);
        q1 = inst.q1;
        q = inst.q;
    } else if (doc.kind == SpecDocument::Kind::Q1) {
        q1 = to_seq_spec_q1(doc);
    } else {
        q = to_seq_spec_q(doc);
    }
    Report r;
    if (q) {
        q->validate();
        r.expect("constraints", check_q_constraints(*q), "d2 = a1 b1/q, d-2 = q a-1 b-1, sum d = 0");
        if (!r.all_pass()) {
            r.print(out);
            return kExitFail;
        }
        out << bidegree_triple(*q).to_string() << '\n';
        return kExitPass;
    }
    q1->validate();
    if (!check_q1_constraints(*q1)) {
        const Scalar d3 = q1->a1 * q1->b2 + q1->a2 * q1->b1 - Scalar(2) * q1->a2 * q1->b2;
        r.expect("constraints", false,
                 "d3=" + q1->d3.to_string() + " (needs " + d3.to_string() + "), d4=" + q1->d4.to_string() +
                     " (needs " + (q1->a2 * q1->b2).to_string() + ")");
        r.print(out);
        return kExitFail;
    }
    const DegreeTriple t = degree_triple(*q1);
    NodeId id;
    try {
        id = classify_spec(*q1);
    } catch (const Error& e) {
        r.error("classify", e);
        out << t.to_string() << '\n';
        r.print(out);
        return kExitFail;
    }
    const UniformParams u = normalize_uniform(*q1);
    out << t.to_string() << " node=" << node_label(id) << '\n';
    out << "a2=" << u.a2 << " b1=" << u.b1 << " b2=" << u.b2 << " d2=" << u.d2 << '\n';
    return kExitPass;
}

inline int cmd_verify(const CliInput& in, int n_max, const std::string& perturb, bool all, std::ostream& out)
{
    Report r;
    const std::optional<std::string> pert = perturb.empty() ? std::nullopt : std::optional(perturb);
    if (all) {
        if (!in.family.empty() || !in.spec.empty())
            throw Error(Errc::ParseError, "--all-catalog takes no --family or --spec");
        r = verify_all_catalog(n_max);
    } else {
        SpecDocument doc = input_document(in);
        if (doc.kind == SpecDocument::Kind::Family) {
            r = verify_family(find_family(doc.family), doc.params, n_max, pert);
        } else {
            if (pert) {
                if (doc.kind != SpecDocument::Kind::Q1)
                    throw Error(Errc::ParseError, "--perturb applies to q = 1 documents");
                SeqSpecQ1 probe;
                probe.coeff(*pert);
                auto& m = pert->front() == 'a' ? doc.h : pert->front() == 'b' ? doc.x : doc.g;
                m[*pert] += Scalar(1);
            }
            try {
                r = verify_realized(realize(doc), n_max);
            } catch (const std::exception& e) {
                r.error("build", e);
            }
        }
    }
    r.print(out);
    return r.exit_code();
}

inline int cmd_dual(const CliInput& in, int n_max, std::ostream& out)
{
    const RealizedSpec rs = realize(input_document(in));
    Report r;
    std::optional<TripleData<Scalar>> dual;
    try {
        dual = dualize(rs.data);
    } catch (const Error& e) {
        r.error("dual", e);
        r.print(out);
        return kExitFail;
    }
    const int top = std::min({n_max, 6, rs.data.depth() - 1});
    out << "k h~_k x~_k g_k\n";
    for (int k = 0; k <= top; ++k)
        out << k << ' ' << dual->h(k).to_string() << ' ' << dual->x(k).to_string() << ' ' << dual->g(k).to_string()
            << '\n';
    detail::run_check(r, "dual_identity", [&] {
        for (int n = 0; n <= top; ++n)
            for (int m = 0; m <= top; ++m)
                if (!dual_identity_check(rs.data, n, m)) {
                    r.expect("dual_identity", false, "n=" + std::to_string(n) + " m=" + std::to_string(m));
                    return;
                }
        r.expect("dual_identity", true, "U_n(x_m) = dual U_m(h_n) for 0<=n,m<=" + std::to_string(top));
    });
    r.print(out);
    return r.exit_code();
}

inline int cmd_limit(const std::string& name, ParamMap params, int K, std::ostream& out)
{
    const LimitCase& c = find_limit_case(name);
    require_builtin(c);
    Report r = certify_limit(c, params, K);
    r.print(out);
    return r.exit_code();
}

inline int cmd_graph(const std::string& format, std::ostream& out)
{
    const SchemeGraph& g = scheme_graph();
    if (format == "json")
        out << to_json(g).dump(2) << '\n';
    else
        out << to_dot(g);
    return kExitPass;
}

} // namespace detail

/// Runs one command; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact data triples for the (q-)Askey scheme", "askeyvs"};
    app.require_subcommand(1, 1);

    detail::CliInput in;
    int n = 2, n_max = 7, K = 8;
    std::string perturb, format = "dot", case_name, params;
    bool all = false;
    std::map<std::string, std::string> limit_flags;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--family", in.family, "catalog family id or acronym");
        sub->add_option("--params", in.params, "parameters k=v[,k=v...]");
        sub->add_option("--spec", in.spec, "spec document path");
    };
    auto* construct = app.add_subcommand("construct", "print u_n, the U_n factor and the A/B table");
    add_input(construct);
    construct->add_option("--n,--nmax", n, "degree")->check(CLI::Range(0, 100));

    auto* classify = app.add_subcommand("classify", "degree triple, scheme node and normalized parameters");
    add_input(classify);

    auto* verify = app.add_subcommand("verify", "run the verification report");
    add_input(verify);
    verify->add_option("--nmax", n_max, "largest degree checked")->check(CLI::Range(1, 100));
    verify->add_option("--perturb", perturb, "add 1 to this q=1 coefficient before checking");
    verify->add_flag("--all-catalog", all, "all 14 q=1 families at default parameters");

    auto* dual = app.add_subcommand("dual", "dual data triple and the duality identity");
    add_input(dual);
    dual->add_option("--nmax", n_max, "largest n, m checked")->check(CLI::Range(0, 100));

    auto* limit = app.add_subcommand("limit", "certify a q -> 1 limit");
    limit->add_option("case", case_name, "limit case name")->required();
    limit->add_option("--K", K, "largest k compared")->check(CLI::Range(1, 60));
    limit->add_option("--params", params, "parameters k=v[,k=v...]");
    for (const char* p : {"a", "b", "c", "d", "lambda", "w"})
        limit->add_option(std::string("--") + p, limit_flags[p], std::string("parameter ") + p);

    auto* graph = app.add_subcommand("graph", "export the q=1 scheme graph");
    graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (construct->parsed())
            return detail::cmd_construct(in, n, out);
        if (classify->parsed())
            return detail::cmd_classify(in, out);
        if (verify->parsed())
            return detail::cmd_verify(in, n_max, perturb, all, out);
        if (dual->parsed())
            return detail::cmd_dual(in, n_max, out);
        if (limit->parsed()) {
            ParamMap p = parse_param_list(params);
            for (const auto& [k, v] : limit_flags)
                if (!v.empty()) {
                    try {
                        p[k] = Scalar::parse(v);
                    } catch (const Error& e) {
                        throw Error(Errc::ParseError, "--" + k + ": " + e.detail());
                    }
                }
            return detail::cmd_limit(case_name, p, K, out);
        }
        return detail::cmd_graph(format, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return detail::is_usage_error(e.code()) ? kExitUsage : kExitFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
}

} // namespace askeyvs

#endif
