#include <gtest/gtest.h>

#include <random>

#include "askeyvs/spec_document.hpp"
#include "support.hpp"

using namespace askeyvs;
using testing_support::S;

namespace {

Errc parse_error_code(const std::string& text, std::string* detail = nullptr)
{
    try {
        (void)parse_spec_document(text);
    } catch (const Error& e) {
        if (detail)
            *detail = e.detail();
        return e.code();
    }
    return Errc::NoMatch;
}

SpecDocument random_document(std::mt19937& rng)
{
    SpecDocument doc;
    std::uniform_int_distribution<int> pick(0, 2), coin(0, 1);
    auto value = [&] { return testing_support::random_gaussian(rng, 30); };
    switch (pick(rng)) {
    case 0: {
        const auto& cat = catalog();
        const FamilyEntry& e = cat[std::uniform_int_distribution<std::size_t>(0, cat.size() - 1)(rng)];
        doc.family = coin(rng) ? e.id : e.acronym;
        for (const auto& p : e.params)
            doc.params[p] = value();
        break;
    }
    case 1:
        doc.kind = SpecDocument::Kind::Q1;
        for (const char* k : {"a0", "a1", "a2"})
            if (coin(rng))
                doc.h[k] = value();
        for (const char* k : {"b0", "b1", "b2"})
            if (coin(rng))
                doc.x[k] = value();
        for (const char* k : {"d1", "d2", "d3", "d4"})
            if (coin(rng))
                doc.g[k] = value();
        break;
    default:
        doc.kind = SpecDocument::Kind::Q;
        doc.q = value();
        for (const char* k : {"a-1", "a0", "a1"})
            if (coin(rng))
                doc.h[k] = value();
        for (const char* k : {"b-1", "b0", "b1"})
            if (coin(rng))
                doc.x[k] = value();
        for (const char* k : {"d-2", "d-1", "d0", "d1", "d2"})
            if (coin(rng))
                doc.g[k] = value();
    }
    if (coin(rng))
        doc.depth = std::uniform_int_distribution<int>(1, 30)(rng);
    return doc;
}

} // namespace

TEST(SpecDocument, FamilyForm)
{
    SpecDocument d = parse_spec_document("# comment\nfamily = wilson\n[params]\na = 1\nb=2\n  c = 3/2 \nd = 1+i\n");
    EXPECT_EQ(d.kind, SpecDocument::Kind::Family);
    EXPECT_EQ(d.family, "wilson");
    EXPECT_EQ(d.params.at("c"), S("3/2"));
    EXPECT_EQ(d.params.at("d"), S("1+i"));
}

TEST(SpecDocument, GreekParameterNames)
{
    SpecDocument d = parse_spec_document("family = laguerre\n[params]\nα = 3\n");
    EXPECT_EQ(d.params.at("alpha"), Scalar(3));
}

TEST(SpecDocument, RawQ1)
{
    SpecDocument d = parse_spec_document("kind = q1\ndepth = 9\n[h]\na1 = -1\n[x]\nb1 = 1\n[g]\nd1 = 2\n");
    SeqSpecQ1 s = to_seq_spec_q1(d);
    EXPECT_EQ(s.a1, Scalar(-1));
    EXPECT_EQ(s.d1, Scalar(2));
    EXPECT_EQ(realize(d).data.depth(), 9);
}

TEST(SpecDocument, RawQ)
{
    SpecDocument d = parse_spec_document("kind = q\nq = 3\n[h]\na-1 = 1\na0 = -1\n[g]\nd-1 = 1\nd0 = -1\n");
    SeqSpecQ s = to_seq_spec_q(d);
    EXPECT_EQ(s.q, Scalar(3));
    EXPECT_EQ(s.A(-1), Scalar(1));
    EXPECT_EQ(s.D(-1), Scalar(1));
}

TEST(SpecDocument, DiagnosticsNameLineAndField)
{
    std::string detail;
    EXPECT_EQ(parse_error_code("family = charlier\n[params]\na = 0.5\n", &detail), Errc::ParseError);
    EXPECT_NE(detail.find("line 3"), std::string::npos);
    EXPECT_NE(detail.find("'a'"), std::string::npos);

    EXPECT_EQ(parse_error_code("kind = q1\n[h]\nb1 = 1\n", &detail), Errc::ParseError);
    EXPECT_NE(detail.find("line 3"), std::string::npos);
    EXPECT_NE(detail.find("'b1'"), std::string::npos);

    EXPECT_EQ(parse_error_code("family = charlier\nfamily = wilson\n", &detail), Errc::ParseError);
    EXPECT_NE(detail.find("repeated"), std::string::npos);

    EXPECT_EQ(parse_error_code("kind = q\n[h]\na0 = 1\n", &detail), Errc::ParseError);
    EXPECT_NE(detail.find("'q'"), std::string::npos);

    EXPECT_EQ(parse_error_code("[params]\na = 1\n"), Errc::ParseError);
    EXPECT_EQ(parse_error_code("family = charlier\n[junk]\n"), Errc::ParseError);
    EXPECT_EQ(parse_error_code("family = charlier\na 1\n"), Errc::ParseError);
    EXPECT_EQ(parse_error_code("kind = q1\n[h]\na3 = 1\n"), Errc::ParseError);
    EXPECT_EQ(parse_error_code("kind = q2\n"), Errc::ParseError);
}

TEST(SpecDocument, RealizeFamily)
{
    SpecDocument d = parse_spec_document("family = Ch\n[params]\na = 1\n");
    RealizedSpec r = realize(d);
    ASSERT_NE(r.entry, nullptr);
    EXPECT_EQ(r.entry->id, "charlier");
    EXPECT_EQ(r.data.h(3), Scalar(-3));
}

TEST(SpecDocument, RoundTrip)
{
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        SpecDocument doc = random_document(rng);
        const std::string text = serialize_spec_document(doc);
        SpecDocument back = parse_spec_document(text);
        EXPECT_EQ(back, doc) << text;
        EXPECT_EQ(serialize_spec_document(back), text);
    }
}

TEST(SpecDocument, RoundTripIgnoresOrderAndWhitespace)
{
    SpecDocument a = parse_spec_document("kind=q1\n[g]\nd1=1\n[h]\n   a1 =   -1\n");
    SpecDocument b = parse_spec_document("kind = q1\n\n[h]\na1 = -1   # h\n[g]\nd1 = 1\n");
    EXPECT_EQ(a, b);
}
