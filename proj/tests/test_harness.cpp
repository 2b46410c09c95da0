#include "filtharm/harness.hpp"
#include "filtharm/table_csv.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

using namespace fh;
using namespace fh::harness;

namespace {

std::vector<ParseError> errors_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.errors();
    }
    return {};
}

std::string json_of(const Config& cfg) {
    std::ostringstream os;
    emit_report(run_suites(cfg), "json", os);
    return os.str();
}

}  // namespace

TEST_CASE("linear congruential generator") {
    std::uint64_t x = 42;
    Lcg g(42);
    for (int k = 0; k < 100; ++k) {
        x = x * 6364136223846793005ULL + 1442695040888963407ULL;
        CHECK(g.next() == static_cast<std::uint32_t>(x >> 32));
    }
    Lcg h(7);
    for (int k = 0; k < 1000; ++k) {
        const long v = h.uniform(-3, 4);
        CHECK(v >= -3);
        CHECK(v <= 4);
    }
}

TEST_CASE("minimal config") {
    const Config cfg = parse_config("[field]\nq = 2\n[suite poisson0]\n");
    CHECK(cfg.field->q() == 2);
    REQUIRE(cfg.suites.size() == 1);
    CHECK(cfg.suites[0].name == "poisson0");
    CHECK(cfg.format == "text");
}

TEST_CASE("full config") {
    const Config cfg = parse_config(R"(# two models and a triple
[field]
descriptor = 3,2,[2,2,1]
[run]
seed = 0x10
format = json
[model L]
type = c1
slots = -inf..inf; 0..2
shift = 1
[model K]
type = c2
pieces = -inf:-inf..inf; 0:0..0
[triple T]
mid = L
cuts = 0, 1
[triple U]
mid = K
cuts = -inf:0
[suite poisson1]
triples = T
scales = 1, q, 1/q
)");
    CHECK(cfg.field->q() == 9);
    CHECK(cfg.seed == 16);
    CHECK(cfg.format == "json");
    CHECK(cfg.models1.at("L")->slots().size() == 2);
    CHECK(cfg.models1.at("L")->shift() == 1);
    CHECK(cfg.models2.at("K")->pieces().size() == 2);
    CHECK(cfg.triples1.count("T") == 1);
    CHECK(cfg.triples2.count("U") == 1);
    CHECK(cfg.triples1.at("T").mid() == cfg.models1.at("L"));
}

TEST_CASE("undeclared model is reported with its line") {
    const auto errs = errors_of("[field]\nq = 2\n[triple T]\nmid = Nowhere\ncuts = 0\n");
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].line == 4);
    CHECK(errs[0].message.find("Nowhere") != std::string::npos);
}

TEST_CASE("cap violations") {
    auto errs = errors_of("[field]\nq = 4\n[suite poisson0]\nn = 7\n");
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].line == 4);
    CHECK(errs[0].message.find("cap violation") != std::string::npos);
    errs = errors_of("[field]\nq = 2\n[suite poisson1]\ncap = 5000\n");
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].message.find("cap violation") != std::string::npos);
    CHECK(errors_of("[field]\nq = 4\n[suite poisson0]\nn = 6\n").empty());
}

TEST_CASE("other config errors carry line numbers") {
    const auto errs = errors_of("[field]\nq = 6\n");
    REQUIRE_FALSE(errs.empty());
    CHECK(errs[0].line == 2);
    auto e = errors_of("[field]\nq = 2\n[suite nope]\n");
    REQUIRE(e.size() == 1);
    CHECK(e[0].line == 3);
    e = errors_of("[field]\nq = 2\n[suite poisson0]\nbogus = 1\n");
    REQUIRE(e.size() == 1);
    CHECK(e[0].line == 4);
    e = errors_of("[field]\nq = 2\n[suite poisson1]\nscales = 1/0\n");
    REQUIRE(e.size() == 1);
    CHECK(e[0].line == 4);
    e = errors_of("[field]\nq = 2\n[model A]\n[model A]\n");
    REQUIRE(e.size() == 1);
    CHECK(e[0].line == 4);
    CHECK_FALSE(errors_of("[field]\nq = 2\n[suite character]\nfault = wrong\n").empty());
}

TEST_CASE("scalar syntax") {
    CHECK(parse_scalar_value("q^-2", 3) == frac(1, 9));
    CHECK(parse_scalar_value("1/q", 4) == frac(1, 4));
    CHECK(parse_scalar_value("-3/6", 4) == frac(-1, 2));
    CHECK_THROWS_AS(parse_scalar_value("x", 2), std::invalid_argument);
    CHECK(parse_integers("1, 3..5, -inf") == std::vector<long>{1, 3, 4, 5, -kInf});
}

TEST_CASE("empty suite list gives an empty valid document") {
    const Config cfg = parse_config("[field]\nq = 2\n");
    const auto reports = run_suites(cfg);
    CHECK(reports.empty());
    CHECK(all_ok(reports));
    const auto doc = nlohmann::json::parse(json_of(cfg));
    CHECK(doc["suites"].is_array());
    CHECK(doc["suites"].empty());
    CHECK(doc["passed"] == true);
}

TEST_CASE("passing and failing suites") {
    const Config good = parse_config("[field]\nq = 3\n[suite character]\n");
    auto reports = run_suites(good);
    REQUIRE(reports.size() == 1);
    CHECK(all_ok(reports));
    auto doc = nlohmann::json::parse(json_of(good));
    CHECK(doc["suites"].size() == 1);
    CHECK(doc["suites"][0]["failures"].empty());

    const Config bad = parse_config("[field]\nq = 3\n[suite character]\nfault = psi\n");
    reports = run_suites(bad);
    CHECK_FALSE(all_ok(reports));
    doc = nlohmann::json::parse(json_of(bad));
    const auto& fails = doc["suites"][0]["failures"];
    REQUIRE_FALSE(fails.empty());
    std::set<std::string> ids;
    for (const auto& x : fails) ids.insert(x["identity"].get<std::string>());
    CHECK(ids.count("psi is nontrivial") == 1);
    CHECK(doc["passed"] == false);
}

TEST_CASE("same seed, same bytes") {
    const std::string text = "[field]\nq = 2\n[run]\nseed = 99\n[suite fourier0_laws]\ncases = 20\n[suite fourier1_laws]\ncases = 5\n"
                             "[suite central_ext]\ncases = 20\n";
    const std::string a = json_of(parse_config(text)), b = json_of(parse_config(text));
    CHECK(a == b);
    CHECK(a.find("time") == std::string::npos);
    // A different seed changes the record.
    Config other = parse_config(text);
    other.seed = 100;
    CHECK(json_of(other) != a);
}

TEST_CASE("report records the seed and identities") {
    Config cfg = parse_config("[field]\nq = 2\n[run]\nseed = 5\n[suite poisson0]\n[suite character]\n");
    const auto r = run_suites(cfg);
    REQUIRE(r.size() == 2);
    CHECK(r[0].seed != r[1].seed);
    CHECK(r[0].seed == 5 + 0x9E3779B97F4A7C15ULL);
    CHECK(r[0].identities == find_suite("poisson0")->identities);
    CHECK(run_suites(cfg, {"character"}).size() == 1);
}

TEST_CASE("every suite documents the identities it checks") {
    std::set<std::string> names;
    for (const auto& s : suite_catalog()) {
        CHECK(names.insert(s.name).second);
        CHECK_FALSE(s.identities.empty());
        CHECK_FALSE(s.summary.empty());
        CHECK(s.fn != nullptr);
    }
    for (const char* n : {"poisson0", "fourier0_laws", "character", "poisson1", "haar_lattice_fourier", "fourier1_laws",
                          "fubini", "projection", "composition", "base_change", "fourier_image", "virtual_measure",
                          "poisson2_I", "poisson2_II", "central_ext", "representation", "fourier_intertwine",
                          "base_change2", "fourier_image2"})
        CHECK(names.count(n) == 1);
    CHECK(find_suite("base_change")->identities.size() == 12);
    CHECK(find_suite("base_change2")->identities.size() == 16);
    CHECK(find_suite("fourier_image")->identities.size() == 8);
}

TEST_CASE("suite failures name identities from the catalog") {
    // Any identity a suite reports must be one it advertises.
    const Config cfg = parse_config("[field]\nq = 3\n[suite poisson0]\nn = 2\nfault = measure\n[suite poisson1]\nfault = transition\n");
    for (const auto& r : run_suites(cfg)) {
        CHECK_FALSE(r.ok());
        const auto& ids = find_suite(r.suite)->identities;
        for (const auto& f : r.failures) CHECK(std::find(ids.begin(), ids.end(), f.identity) != ids.end());
    }
}

TEST_CASE("CSV tables round-trip") {
    oracle::Gen g(41);
    for (int q : {2, 3, 5}) {
        const FieldPtr f = FqField::standard(q);
        const Fn0 t = g.table(FinSpace(f, 2));
        std::stringstream ss;
        write_csv_table(ss, t, {-1, 1});
        const CsvTable back = read_csv_table(ss, f);
        CHECK(back.table == t);
        CHECK(back.window == std::vector<long>{-1, 1});
    }
}

TEST_CASE("CSV errors are positioned") {
    const FieldPtr f = FqField::standard(3);
    const auto err_line = [&](const std::string& text) {
        std::istringstream is(text);
        try {
            read_csv_table(is, f);
        } catch (const CsvError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(err_line("q=2,dim=1,enumeration=lex\n") == 1);
    CHECK(err_line("q=3,dim=1,enumeration=lex\n0,1/2\n") == 2);
    CHECK(err_line("q=3,dim=1,enumeration=lex\n0,1/2,0\n3,1,0\n") == 3);
    CHECK(err_line("q=3,dim=1,enumeration=lex\n0,1/2,0\n0,1,0\n") == 3);
    CHECK(err_line("q=3,dim=1,enumeration=lex\n# note\n\n0,x,0\n") == 4);
    std::istringstream ok("q=3,dim=1,enumeration=lex\n2,1/2,-1\n");
    const CsvTable t = read_csv_table(ok, f);
    CHECK(t.table[0].is_zero());
    CHECK(t.table[2] == CycNum(3, {frac(1, 2), Rational(-1)}));
}
