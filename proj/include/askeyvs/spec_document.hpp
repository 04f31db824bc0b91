#ifndef ASKEYVS_SPEC_DOCUMENT_HPP
#define ASKEYVS_SPEC_DOCUMENT_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"
#include "classify.hpp"
#include "error.hpp"
#include "scalar.hpp"
#include "spectral.hpp"

namespace askeyvs {

/// Text form of a data triple. Either a catalog family with parameters
///
///     family = charlier
///     [params]
///     a = 1
///
/// or raw coefficients
///
///     kind = q1            # or: kind = q, with q = <value>
///     depth = 10           # optional
///     [h]
///     a1 = 1
///     [x]
///     b1 = 1
///     [g]
///     d1 = 1
///
/// '#' starts a comment. Values are exact literals (p/q, p/q+r/s i).
struct SpecDocument {
    enum class Kind { Family, Q1, Q };

    Kind kind = Kind::Family;
    std::string family;
    ParamMap params;
    std::optional<Scalar> q;
    std::map<std::string, Scalar> h, x, g;
    std::optional<int> depth;

    friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

inline std::string_view kind_name(SpecDocument::Kind k)
{
    switch (k) {
    case SpecDocument::Kind::Family: return "family";
    case SpecDocument::Kind::Q1: return "q1";
    case SpecDocument::Kind::Q: return "q";
    }
    return "family";
}

namespace detail {

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline bool key_allowed(const std::string& section, const std::string& key, bool q_kind)
{
    const char want = section == "h" ? 'a' : section == "x" ? 'b' : 'd';
    if (key.empty() || key[0] != want)
        return false;
    try {
        if (q_kind) {
            SeqSpecQ s;
            s.coeff(key);
        } else {
            SeqSpecQ1 s;
            s.coeff(key);
        }
    } catch (const Error&) {
        return false;
    }
    return true;
}

} // namespace detail

/// Parses a document; ParseError details carry "line N:" and the field.
inline SpecDocument parse_spec_document(std::string_view text)
{
    SpecDocument doc;
    std::string section;
    bool has_family = false, has_kind = false;
    std::map<std::string, int> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        return Error(Errc::ParseError, (lineno > 0 ? "line " + std::to_string(lineno) + ": " : "document: ") + why);
    };

    struct Pending {
        std::string section, key;
        Scalar value;
        int line;
    };
    std::vector<Pending> coeffs;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw fail("unterminated section header '" + line + "'");
            section = detail::trim(line.substr(1, line.size() - 2));
            if (section != "params" && section != "h" && section != "x" && section != "g")
                throw fail("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw fail("expected key = value, got '" + line + "'");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty())
            throw fail("missing key");
        if (value.empty())
            throw fail("field '" + key + "' has no value");
        const std::string slot = section + "/" + key;
        if (seen.count(slot))
            throw fail("field '" + key + "' repeated (first on line " + std::to_string(seen[slot]) + ")");
        seen[slot] = lineno;

        auto number = [&]() {
            try {
                return Scalar::parse(value);
            } catch (const Error& e) {
                throw fail("field '" + key + "': " + e.detail());
            }
        };

        if (section.empty()) {
            if (key == "family") {
                doc.family = value;
                has_family = true;
            } else if (key == "kind") {
                if (value == "q1")
                    doc.kind = SpecDocument::Kind::Q1;
                else if (value == "q")
                    doc.kind = SpecDocument::Kind::Q;
                else if (value == "family")
                    doc.kind = SpecDocument::Kind::Family;
                else
                    throw fail("field 'kind' must be family, q1 or q, got '" + value + "'");
                has_kind = true;
            } else if (key == "q") {
                doc.q = number();
            } else if (key == "depth") {
                auto v = number().to_long();
                if (!v || *v < 1 || *v > 200)
                    throw fail("field 'depth' must be an integer in 1..200, got '" + value + "'");
                doc.depth = static_cast<int>(*v);
            } else {
                throw fail("unknown field '" + key + "'");
            }
        } else if (section == "params") {
            doc.params[canonical_param_name(key)] = number();
        } else {
            coeffs.push_back({section, key, number(), lineno});
        }
    }

    lineno = 0;
    if (has_family && has_kind && doc.kind != SpecDocument::Kind::Family)
        throw fail("field 'family' conflicts with kind = " + std::string(kind_name(doc.kind)));
    if (!has_family && !has_kind)
        throw fail("missing field 'family' or 'kind'");
    if (doc.kind == SpecDocument::Kind::Family) {
        if (!has_family)
            throw fail("missing field 'family'");
        if (!coeffs.empty()) {
            lineno = coeffs.front().line;
            throw fail("coefficient sections need kind = q1 or kind = q");
        }
        if (doc.q) {
            doc.params["q"] = *doc.q;
            doc.q.reset();
        }
    } else {
        if (!doc.params.empty())
            throw fail("[params] needs a family");
        if (doc.kind == SpecDocument::Kind::Q && !doc.q)
            throw fail("missing field 'q' for kind = q");
        if (doc.kind == SpecDocument::Kind::Q1 && doc.q)
            throw fail("field 'q' is not used with kind = q1");
    }
    for (const auto& c : coeffs) {
        lineno = c.line;
        if (!detail::key_allowed(c.section, c.key, doc.kind == SpecDocument::Kind::Q))
            throw fail("field '" + c.key + "' does not belong in [" + c.section + "] for kind = " +
                       std::string(kind_name(doc.kind)));
        auto& target = c.section == "h" ? doc.h : c.section == "x" ? doc.x : doc.g;
        target[c.key] = c.value;
    }
    return doc;
}

inline std::string serialize_spec_document(const SpecDocument& doc)
{
    std::ostringstream os;
    if (doc.kind == SpecDocument::Kind::Family) {
        os << "family = " << doc.family << '\n';
    } else {
        os << "kind = " << kind_name(doc.kind) << '\n';
        if (doc.q)
            os << "q = " << doc.q->to_string() << '\n';
    }
    if (doc.depth)
        os << "depth = " << *doc.depth << '\n';
    auto block = [&](const char* name, const auto& m) {
        if (m.empty())
            return;
        os << '[' << name << "]\n";
        for (const auto& [k, v] : m)
            os << k << " = " << v.to_string() << '\n';
    };
    block("params", doc.params);
    block("h", doc.h);
    block("x", doc.x);
    block("g", doc.g);
    return os.str();
}

inline SpecDocument read_spec_document(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error(Errc::ParseError, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_spec_document(ss.str());
}

/// Coefficients of a raw q = 1 document; absent coefficients are zero.
inline SeqSpecQ1 to_seq_spec_q1(const SpecDocument& doc)
{
    SeqSpecQ1 s;
    for (const auto* m : {&doc.h, &doc.x, &doc.g})
        for (const auto& [k, v] : *m)
            s.coeff(k) = v;
    return s;
}

inline SeqSpecQ to_seq_spec_q(const SpecDocument& doc)
{
    SeqSpecQ s;
    s.q = doc.q.value_or(Scalar(2));
    for (const auto* m : {&doc.h, &doc.x, &doc.g})
        for (const auto& [k, v] : *m)
            s.coeff(k) = v;
    return s;
}

/// Document plus its data: the catalog entry (if any), the coefficient form
/// and the evaluated triple.
struct RealizedSpec {
    const FamilyEntry* entry = nullptr;
    ParamMap params;
    std::optional<SeqSpecQ1> q1;
    std::optional<SeqSpecQ> q;
    TripleData<Scalar> data;
};

inline RealizedSpec realize(const SpecDocument& doc)
{
    if (doc.kind == SpecDocument::Kind::Family) {
        FamilyInstance inst = build_family(doc.family, doc.params, doc.depth);
        return {inst.entry, inst.params, inst.q1, inst.q, inst.data};
    }
    const int K = doc.depth.value_or(kDefaultDepth);
    if (doc.kind == SpecDocument::Kind::Q1) {
        SeqSpecQ1 s = to_seq_spec_q1(doc);
        return {nullptr, {}, s, std::nullopt, s.triple(K)};
    }
    SeqSpecQ s = to_seq_spec_q(doc);
    return {nullptr, {}, std::nullopt, s, s.triple(K)};
}

} // namespace askeyvs

#endif
