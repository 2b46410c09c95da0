#pragma once
/**
 * @file harness.hpp
 * @brief Verification harness: sectioned key=value configs, a seeded
 *        generator, the suite registry, and text/JSON reports.
 *
 * Config format (one `key = value` per line, `#` starts a comment):
 *
 *     [field]            q = 4 | p,n,modulus via `descriptor = 2,2,[1,1,1]`
 *                        character = standard | trivial
 *     [run]              seed, format = text|json, out
 *     [model NAME]       type = c1: slots = a..b; a..b   shift = 0
 *                        type = c2: pieces = from:a..b; ...  outer_shift, inner_shift
 *     [triple NAME]      mid = MODEL, cuts = c1: one cut per slot / c2: from:cut; ...
 *     [suite NAME]       suite parameters (see suite_catalog())
 *
 * `inf` and `-inf` are accepted wherever a bound is expected.
 */

#include "filtharm/c2.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace fh::harness {

/// x' = 6364136223846793005·x + 1442695040888963407 (mod 2^64); outputs the high 32 bits.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : x_(seed) {}
    std::uint32_t next();
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return (next() & 1U) != 0; }
    std::uint64_t state() const { return x_; }

private:
    std::uint64_t x_;
};

struct ParseError {
    int line = 0;
    std::string message;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<ParseError> errors);
    const std::vector<ParseError>& errors() const { return errors_; }

private:
    std::vector<ParseError> errors_;
};

struct Param {
    std::string value;
    int line = 0;
};

struct SuiteSpec {
    std::string name;  ///< registry name
    int line = 0;
    std::map<std::string, Param> params;
};

struct Config {
    FieldPtr field;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out;
    std::map<std::string, ModelPtr> models1;
    std::map<std::string, C2Ptr> models2;
    std::map<std::string, TripleC1> triples1;
    std::map<std::string, TripleC2> triples2;
    std::vector<SuiteSpec> suites;
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);

/// Value syntax shared with configs: `3`, `q`, `q^-2`, `1/q`; throws std::invalid_argument.
Rational parse_scalar_value(const std::string& text, int q);
/// Comma-separated integers and `a..b` ranges; `inf`/`-inf` allowed.
std::vector<long> parse_integers(const std::string& text);

struct Failure {
    std::string identity;
    std::string where;
    std::string expected;  ///< table digest
    std::string actual;
};

struct Report {
    std::string suite;
    std::vector<std::string> identities;
    long cases = 0;
    long skipped = 0;
    std::vector<Failure> failures;
    double seconds = 0;
    std::uint64_t seed = 0;
    bool ok() const { return failures.empty(); }
};

/// Parameter access for a running suite; defaults apply to absent keys.
class SuiteArgs {
public:
    SuiteArgs(const Config& cfg, const SuiteSpec& spec) : cfg_(cfg), spec_(spec) {}

    const Config& config() const { return cfg_; }
    long integer(const std::string& key, long dflt) const;
    std::vector<long> integers(const std::string& key, std::vector<long> dflt) const;
    /// Rationals; `q` stands for the field size, e.g. `1, q, 1/q`.
    std::vector<Rational> scalars(const std::string& key, std::vector<Rational> dflt) const;
    std::string word(const std::string& key, const std::string& dflt) const;
    bool has(const std::string& key) const { return spec_.params.count(key) != 0; }
    const Param* raw(const std::string& key) const;

private:
    const Config& cfg_;
    const SuiteSpec& spec_;
};

/// Accumulates cases and failures for one suite.
class Recorder {
public:
    explicit Recorder(Report& r) : r_(r) {}
    void pass() { ++r_.cases; }
    void skip() { ++r_.skipped; }
    /// Counts one case; records a failure when ok is false.
    bool check(bool ok, const std::string& identity, const std::string& where, const std::string& expected = "",
               const std::string& actual = "");
    bool check(const Fn0& expected, const Fn0& actual, const std::string& identity, const std::string& where);
    void merge(const Compare2Report& c, const std::string& identity, const std::string& where);

private:
    Report& r_;
};

std::string digest(const Fn0& t);
std::string digest(const CycNum& c);

/// Cap: at most the table cap. Dim: q^value at most the table cap.
enum class Kind { Int, IntList, Scalars, Word, Cap, Dim, Model1, Model2, Triple1, Triple2 };

struct ParamInfo {
    std::string key;
    Kind kind;
    std::vector<std::string> words;  ///< allowed values for Kind::Word
};

using SuiteFn = void (*)(FieldPtr field, const SuiteArgs& args, Lcg& rng, Recorder& rec);

struct SuiteInfo {
    std::string name;
    std::string summary;
    std::vector<std::string> identities;
    std::vector<ParamInfo> params;
    SuiteFn fn;
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(const std::string& name);

/// Runs the config's suites in declaration order; `only` filters by name.
std::vector<Report> run_suites(const Config& cfg, const std::vector<std::string>& only = {});

/// Text with wall times, or JSON with stable key order (timings only if requested).
void emit_report(const std::vector<Report>& reports, const std::string& format, std::ostream& os, bool timings = false);

bool all_ok(const std::vector<Report>& reports);

}  // namespace fh::harness
