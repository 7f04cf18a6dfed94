#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "colorhom/document.hpp"
#include "colorhom/error.hpp"
#include "colorhom/fixtures.hpp"
#include "colorhom/suite.hpp"

using namespace colorhom;
using nlohmann::json;

namespace {

std::string fixture_text(const std::string& name)
{
    return serialize_document(fixture(name));
}

std::string error_of(const std::string& text)
{
    try {
        parse_document(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

json l2_json()
{
    return json::parse(fixture_text("leibniz-L2"));
}

} // namespace

TEST(Document, L2RoundTrip)
{
    const BundleDocument doc = parse_document(fixture_text("leibniz-L2"));
    ASSERT_EQ(kind_of(doc.bundle), BundleKind::Leibniz);
    const auto& l = std::get<LeibnizBundle>(doc.bundle);
    EXPECT_EQ(l.space.dim(), 2u);
    EXPECT_EQ(l, fix_l2());
    EXPECT_EQ(serialize_document(doc), fixture_text("leibniz-L2"));
}

TEST(Document, EveryFixtureRoundTrips)
{
    for (const auto& info : fixture_list()) {
        const std::string text = fixture_text(info.name);
        const BundleDocument doc = parse_document(text);
        EXPECT_EQ(serialize_document(doc), text) << info.name;
        EXPECT_EQ(doc.bundle, fixture(info.name).bundle) << info.name;
        EXPECT_EQ(doc.extra_maps, fixture(info.name).extra_maps) << info.name;
    }
    EXPECT_THROW(fixture("no-such-fixture"), InputError);
}

TEST(Document, SyntaxErrorsHaveLineAndColumn)
{
    const std::string msg = error_of("{\n  \"kind\": \"leibniz\",\n  oops\n}");
    EXPECT_EQ(msg.rfind("line 3, column ", 0), 0u) << msg;
}

TEST(Document, SemanticErrorsHavePath)
{
    json j = l2_json();
    j["ops"]["bracket"][0]["out"] = {{"7", "1"}};
    const std::string msg = error_of(j.dump());
    EXPECT_NE(msg.find("/ops/bracket/0/out/7"), std::string::npos) << msg;

    j = l2_json();
    j["basis"][1]["name"] = "e1";
    EXPECT_NE(error_of(j.dump()).find("/basis/1/name"), std::string::npos);

    j = l2_json();
    j.erase("maps");
    EXPECT_NE(error_of(j.dump()).find("maps"), std::string::npos);

    j = l2_json();
    j["ops"]["bracket"][0]["out"]["0"] = "1/0";
    EXPECT_NE(error_of(j.dump()).find("/ops/bracket/0/out/0"), std::string::npos);
}

TEST(Document, UnknownKeysRejected)
{
    json j = l2_json();
    j["colour"] = 1;
    const std::string msg = error_of(j.dump());
    EXPECT_NE(msg.find("/colour"), std::string::npos) << msg;
    EXPECT_NE(msg.find("unknown key"), std::string::npos) << msg;
}

TEST(Document, WrongSchemaRejected)
{
    json j = l2_json();
    j["schema"] = "colorhom/bundle@9";
    EXPECT_NE(error_of(j.dump()).find("/schema"), std::string::npos);
    j["schema"] = std::string(kBundleSchema);
    j["kind"] = "lie";
    EXPECT_NE(error_of(j.dump()).find("/kind"), std::string::npos);
}

TEST(Document, OddOutputOfWrongDegree)
{
    json j = json::parse(fixture_text("super-S1"));
    // super-S1 has f even (index 0) and e odd (index 1): [e, f] = f has the
    // wrong degree.
    j["ops"]["bracket"].push_back({{"args", {1, 0}}, {"out", {{"0", "1"}}}});
    const std::string msg = error_of(j.dump());
    EXPECT_NE(msg.find("not even"), std::string::npos) << msg;
    EXPECT_NE(msg.find("(1, 0)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("/ops/bracket"), std::string::npos) << msg;
}

TEST(Document, InvalidBicharacterRejected)
{
    json j = json::parse(fixture_text("super-S1"));
    j["bicharacter"] = {{"2"}};
    const std::string msg = error_of(j.dump());
    EXPECT_NE(msg.find("/bicharacter"), std::string::npos) << msg;
}

TEST(Document, GradedDialgebraRejected)
{
    json j = json::parse(fixture_text("dialg-D1"));
    j["grading"] = {{"free_rank", 0}, {"torsion", {2}}};
    j["bicharacter"] = {{"-1"}};
    j["basis"][0]["degree"] = {0};
    EXPECT_NE(error_of(j.dump()).find("/grading"), std::string::npos);
}

TEST(Document, DigestIgnoresFormatting)
{
    const std::string a = fixture_text("nonassoc-NA2");
    const std::string b = json::parse(a).dump();
    const std::string c = json::parse(a).dump(7);
    EXPECT_EQ(document_digest(a), document_digest(b));
    EXPECT_EQ(document_digest(a), document_digest(c));
    EXPECT_EQ(document_digest(a).size(), 64u);
    json j = json::parse(a);
    j["description"] = "changed";
    EXPECT_NE(document_digest(j.dump()), document_digest(a));
    EXPECT_THROW(document_digest("{"), InputError);
}

TEST(Document, LoadFallsBackToJsonSuffix)
{
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "colorhom-doc-test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "l2.json") << fixture_text("leibniz-L2");
    }
    EXPECT_EQ(load_document(dir / "l2").bundle, fixture("leibniz-L2").bundle);
    EXPECT_EQ(load_document(dir / "l2.json").bundle, fixture("leibniz-L2").bundle);
    EXPECT_THROW(load_document(dir / "missing"), InputError);
    std::filesystem::remove_all(dir);
}

TEST(Document, ReportIsWrittenNotRead)
{
    BundleDocument doc = fixture("leibniz-L2");
    doc.report = CheckReport::leaf("color-leibniz", {});
    const std::string text = serialize_document(doc);
    EXPECT_NE(text.find("\"report\""), std::string::npos);
    const BundleDocument back = parse_document(text);
    EXPECT_FALSE(back.report.has_value());
    EXPECT_EQ(back.bundle, doc.bundle);
}

TEST(Document, ComplexScalarsRoundTrip)
{
    const BundleDocument doc = fixture("nhlp-super");
    const std::string text = serialize_document(doc);
    const BundleDocument back = parse_document(text);
    EXPECT_EQ(back.bundle, doc.bundle);
    EXPECT_EQ(serialize_document(back), text);
}

TEST(Report, MachineReportDeterministic)
{
    const BundleDocument doc = fixture("nonassoc-NA2");
    CheckOptions one;
    CheckOptions four;
    four.jobs = 4;
    const std::string digest = document_digest(serialize_document(doc));
    const std::string a = machine_report(run_suite(doc, "all", one), digest);
    const std::string b = machine_report(run_suite(doc, "all", four), digest);
    EXPECT_EQ(a, b);
    const json r = json::parse(a);
    EXPECT_EQ(r["schema"], std::string(kReportSchema));
    EXPECT_EQ(r["input_digest"], digest);
    EXPECT_EQ(r["kind"], "nonassociative");
    EXPECT_EQ(r["passed"], true);
}

TEST(Report, JsonCarriesTuplesAndDefects)
{
    Violation v;
    v.tuple = {0, 1, 0};
    v.defect = -Vector::basis(0, CyclotomicField::rationals());
    const CheckReport r = CheckReport::leaf("hom-flexible.diagonal", {v});
    const json j = json::parse(report_to_json(r));
    EXPECT_EQ(j["identity"], "hom-flexible.diagonal");
    EXPECT_EQ(j["passed"], false);
    EXPECT_EQ(j["violations"][0]["tuple"], json({0, 1, 0}));
    EXPECT_EQ(j["violations"][0]["defect"]["0"], "-1");
}

TEST(Suite, UnknownIdentityListsChoices)
{
    try {
        run_suite(fixture("leibniz-L2"), "hom-flexible", {});
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("color-leibniz"), std::string::npos) << e.what();
    }
}

TEST(Suite, IdentityLists)
{
    EXPECT_EQ(suite_identities(BundleKind::Dialgebra), (std::vector<std::string>{"evenness", "dialgebra"}));
    const auto nhlp = suite_identities(BundleKind::NHLP);
    EXPECT_NE(std::find(nhlp.begin(), nhlp.end(), "nhlp"), nhlp.end());
}

TEST(Suite, BrokenFixtureHasOneViolation)
{
    const SuiteResult r = run_suite(fixture("leibniz-L2-broken"), "all", {});
    EXPECT_FALSE(r.passed());
    std::size_t count = 0;
    for (const SuiteEntry& e : r.entries) {
        if (e.role != Role::Property && !e.skipped) {
            count += e.report.violation_count();
        }
    }
    EXPECT_EQ(count, 1u);
}
