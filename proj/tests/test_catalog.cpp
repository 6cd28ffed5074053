#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fusion/catalog.hpp"
#include "fusion/expr.hpp"
#include "fusion/io.hpp"
#include "fusion/spectral.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fusion;

namespace {

Json rawOf(const std::string& name) { return Catalog::builtin().get(name).raw; }

bool mentions(const EntryCheck& c, const std::string& needle) {
    return std::any_of(c.messages.begin(), c.messages.end(),
                       [&](const std::string& m) { return m.find(needle) != std::string::npos; });
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("fusion-catalog-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    void write(const std::string& file, const Json& j) const { std::ofstream(path / file) << j.dump(1); }
};

}  // namespace

TEST_CASE("quantumInteger") {
    CHECK(quantumInteger(3, 5) == doctest::Approx(1.618).epsilon(1e-3));
    CHECK(quantumInteger(3, 5) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    for (long m = 2; m < 20; ++m) CHECK(quantumInteger(1, m) == doctest::Approx(1.0));
    CHECK(quantumInteger(3, 8) == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(quantumInteger(5, 5), InputError);
    CHECK_THROWS_AS(quantumInteger(0, 5), InputError);
}

TEST_CASE("evalExpression") {
    CHECK(std::abs(evalExpression("2*zeta(3,1)+1") - std::complex<double>(0, std::sqrt(3.0))) < 1e-12);
    CHECK(std::abs(evalExpression("9/4*csc(pi/9)^2") - 2.25 / std::pow(std::sin(M_PI / 9), 2)) < 1e-12);
    CHECK(std::abs(evalExpression("qint(3,5)^2") - std::pow(quantumInteger(3, 5), 2)) < 1e-12);
    CHECK(std::abs(evalExpression("-i*i") - 1.0) < 1e-15);
    CHECK_THROWS_AS(evalExpression("2*(3"), InputError);
    CHECK_THROWS_AS(evalExpression("foo(1)"), InputError);
}

TEST_CASE("loadEntry and listCatalog") {
    auto psu = loadEntry("PSU(3,2)");
    CHECK(psu.kind == EntryKind::CharacterTable);
    CHECK(psu.as<CharacterTable>().order == 72);
    auto z = loadEntry("Z(Rep(S3))");
    CHECK(z.as<ModularDatum>().rank() == 8);
    CHECK_THROWS_AS(loadEntry("nonexistent"), UnknownEntry);
    auto names = listCatalog();
    CHECK(names.size() == Catalog::builtin().entries().size());
    CHECK(std::find(names.begin(), names.end(), "C(A1,9,q)_ad") != names.end());
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
}

TEST_CASE("the builtin catalog verifies") {
    auto rep = verifyCatalog();
    for (const auto& e : rep.entries) {
        INFO(e.name);
        for (const auto& m : e.messages) INFO(m);
        CHECK(e.pass);
    }
    CHECK(rep.pass());
    CHECK(rep.entries.size() >= 100);
}

TEST_CASE("every entry kind is present") {
    std::set<EntryKind> kinds;
    for (const auto& e : Catalog::builtin().entries()) kinds.insert(e.kind);
    CHECK(kinds.size() == 5);
    for (auto k : kinds) CHECK(entryKindFromName(entryKindName(k)) == k);
    CHECK_THROWS_AS(entryKindFromName("table"), InputError);
}

TEST_CASE("class sizes of stored tables match the groups built as permutations") {
    auto check = [](const std::string& name, const std::vector<oracle::Perm>& gens) {
        INFO(name);
        auto g = oracle::generate(gens);
        auto t = loadEntry(name).as<CharacterTable>();
        CHECK(g.size() == t.order);
        auto sizes = t.classSizes;
        std::sort(sizes.begin(), sizes.end());
        CHECK(oracle::classSizes(g) == sizes);
    };
    check("C2", {{1, 0}});
    check("S3", {{1, 2, 0}, {1, 0, 2}});
    check("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}});
    check("D4", {oracle::affine(4, 1, 1), oracle::affine(4, -1, 0)});
    check("F5", {oracle::affine(5, 1, 1), oracle::affine(5, 2, 0)});
    // Hol(C9): x -> a x + b with a a unit mod 9.
    check("Aut(D9)", {oracle::affine(9, 1, 1), oracle::affine(9, 2, 0)});
    // C3^2 extended by the quaternion subgroup of GL(2,3).
    check("PSU(3,2)", {oracle::affine3(1, 0, 0, 1, 1, 0), oracle::affine3(1, 0, 0, 1, 0, 1),
                       oracle::affine3(0, 1, 2, 0, 0, 0), oracle::affine3(1, 1, 1, 2, 0, 0)});
}

TEST_CASE("Aut(D9) class sizes are derived from the columns") {
    const auto& e = Catalog::builtin().get("Aut(D9)");
    CHECK_FALSE(e.raw["payload"].contains("classSizes"));
    CHECK(e.raw["payload"].value("classSizesDerived", false));
    CHECK(e.as<CharacterTable>().classSizes.size() == 10);
}

TEST_CASE("classification rows: dims squared sum to the total") {
    std::size_t checked = 0;
    for (const auto& e : Catalog::builtin().entries()) {
        if (e.kind != EntryKind::ClassificationRow) continue;
        const auto& row = e.as<ClassificationRow>();
        if (row.isStub()) continue;
        INFO(row.name);
        double s = 0;
        for (double d : row.fpdims) s += d * d;
        CHECK(std::abs(s - row.fpdimTotal) <= 1e-6 * std::max(1.0, row.fpdimTotal));
        CHECK(row.fpdims[0] == doctest::Approx(1.0));
        ++checked;
    }
    CHECK(checked >= 60);

    const auto entry = loadEntry("C(A1,9,q)_ad");
    const auto& a19 = entry.as<ClassificationRow>();
    std::vector<double> want{1, quantumInteger(3, 9), quantumInteger(5, 9), quantumInteger(7, 9)};
    REQUIRE(a19.fpdims.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(a19.fpdims[i] == doctest::Approx(want[i]).epsilon(1e-12));
    CHECK(a19.fpdimTotal == doctest::Approx(2.25 / std::pow(std::sin(M_PI / 9), 2)).epsilon(1e-12));
}

TEST_CASE("errata: the printed values really are wrong") {
    std::size_t errata = 0;
    for (const auto& e : Catalog::builtin().entries()) {
        if (e.kind != EntryKind::ClassificationRow) continue;
        const auto& row = e.as<ClassificationRow>();
        if (!row.erratum) continue;
        INFO(row.name);
        ++errata;
        Json printed = e.raw;
        printed["payload"][row.erratum->field] = row.erratum->printed;
        printed["payload"].erase("erratum");
        CHECK_FALSE(verifyEntry(printed).pass);
    }
    CHECK(errata == 4);
}

TEST_CASE("an erratum whose printed value equals the corrected value is rejected") {
    Json raw = rawOf("Rep(C2)⊠C(A1,7,q)_ad");
    REQUIRE(raw["payload"].contains("erratum"));
    raw["payload"]["erratum"]["printed"] = raw["payload"]["fpdimTotal"];
    CHECK_FALSE(verifyEntry(raw).pass);
}

TEST_CASE("fault injection: corrupted tensor entry") {
    Json raw = rawOf("Ising");
    raw["payload"]["tensor"][2][2][2] = 1;
    raw["payload"]["tensor"][1][2][1] = 1;
    auto c = verifyEntry(raw);
    CHECK_FALSE(c.pass);
    CHECK_FALSE(c.messages.empty());

    Json neg = rawOf("Fibonacci");
    neg["payload"]["tensor"][1][1][0] = -1;
    CHECK_FALSE(verifyEntry(neg).pass);
}

TEST_CASE("fault injection: corrupted character tables") {
    Json raw = rawOf("PSU(3,2)");
    raw["payload"]["rows"][5][1] = 0;
    CHECK_FALSE(verifyEntry(raw).pass);

    Json sizes = rawOf("S3");
    sizes["payload"]["classSizes"][1] = 3;
    CHECK_FALSE(verifyEntry(sizes).pass);

    Json kappa = rawOf("A4");
    kappa["expect"]["kappa"] = 3;
    auto c = verifyEntry(kappa);
    CHECK_FALSE(c.pass);
    CHECK(mentions(c, "kappa"));
}

TEST_CASE("fault injection: modular data") {
    Json dim = rawOf("Z(Rep(S3))");
    dim["expect"]["globalDim"] = 35;
    CHECK_FALSE(verifyEntry(dim).pass);

    Json twist = rawOf("Z(Rep(S3))");
    twist["payload"]["T"][3] = Json::array({1, 2});
    CHECK_FALSE(verifyEntry(twist).pass);

    // The A4 double exactly as printed, before the recorded corrections.
    Json printed = rawOf("Z(Rep(A4))");
    for (int r : {11, 12, 13}) printed["payload"]["S"][r][3] = printed["payload"]["S"][3][r] = 3;
    CHECK_FALSE(verifyEntry(printed).pass);
}

TEST_CASE("fault injection: classification rows") {
    Json raw = rawOf("C(A1,9,q)_ad");
    raw["payload"]["fpdims"][1] = "qint(2,9)";
    CHECK_FALSE(verifyEntry(raw).pass);
}

TEST_CASE("malformed entries fail without throwing from verifyEntry") {
    for (const char* text : {R"({"name":"x"})", R"({"name":"x","kind":"fusionRing","payload":{}})",
                             R"({"name":"x","kind":"nope","payload":{}})", R"([1,2,3])"}) {
        INFO(text);
        auto c = verifyEntry(Json::parse(text));
        CHECK_FALSE(c.pass);
        CHECK_THROWS_AS(parseEntry(Json::parse(text)), InputError);
    }
}

TEST_CASE("user catalog directories") {
    TempDir dir;
    Json user = {{"name", "ZC4"},
                 {"kind", "fusionRing"},
                 {"provenance", "user"},
                 {"payload", ringToJson(groupRing(std::vector<std::size_t>{4}))},
                 {"expect", {{"fpdimTotal", 4}}}};
    dir.write("b.json", Json::array({user}));
    Json other = user;
    other["name"] = "ZC4-again";
    dir.write("a.json", other);
    std::ofstream(dir.path / "ignored.txt") << "not json";

    Catalog c;
    c.addDirectory(dir.path);
    CHECK(c.names() == std::vector<std::string>{"ZC4-again", "ZC4"});
    CHECK(c.get("ZC4").source.find("b.json") != std::string::npos);
    CHECK(verifyCatalog(c).pass());
    CHECK_THROWS_AS(c.add(parseEntry(user)), InputError);

    dir.write("c.json", Json::parse(R"({"name":"broken","kind":"fusionRing","payload":{"tensor":[[[2]]],"dual":[0]}})"));
    Catalog d;
    CHECK_THROWS(d.addDirectory(dir.path));
    CHECK_THROWS_AS(Catalog().addDirectory(dir.path / "missing"), InputError);
}
