/**
 * @file harness.cpp
 * @brief Config parsing, suite dispatch and report emission.
 */
#include "filtharm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fh::harness {

std::uint32_t Lcg::next() {
    x_ = x_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(x_ >> 32);
}

long Lcg::uniform(long lo, long hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t wide = (static_cast<std::uint64_t>(next()) << 32) | next();
    return lo + static_cast<long>(wide % span);
}

namespace {

std::string join_errors(const std::vector<ParseError>& es) {
    std::ostringstream os;
    for (const auto& e : es) os << "line " << e.line << ": " << e.message << "\n";
    return os.str();
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

struct Bad : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long parse_long(const std::string& s) {
    const std::string t = trim(s);
    if (t == "inf" || t == "+inf") return kInf;
    if (t == "-inf") return -kInf;
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(t, &pos);
    } catch (...) {
        throw Bad("expected an integer, got '" + t + "'");
    }
    if (pos != t.size()) throw Bad("expected an integer, got '" + t + "'");
    return v;
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    for (const auto& item : split(s, ',')) {
        if (item.empty()) continue;
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const long a = parse_long(item.substr(0, dots)), b = parse_long(item.substr(dots + 2));
            if (b < a || b - a > 10000) throw Bad("bad range '" + item + "'");
            for (long v = a; v <= b; ++v) out.push_back(v);
        } else {
            out.push_back(parse_long(item));
        }
    }
    return out;
}

Rational parse_scalar(const std::string& s, int q) {
    const std::string t = trim(s);
    const auto slash = t.find('/');
    if (slash != std::string::npos) {
        const Rational den = parse_scalar(t.substr(slash + 1), q);
        if (sgn(den) == 0) throw Bad("division by zero in '" + t + "'");
        return parse_scalar(t.substr(0, slash), q) / den;
    }
    if (t.rfind("q^", 0) == 0) return qpow(q, parse_long(t.substr(2)));
    if (t == "q") return q;
    const long v = parse_long(t);
    return v;
}

std::vector<Rational> parse_scalars(const std::string& s, int q) {
    std::vector<Rational> out;
    for (const auto& item : split(s, ','))
        if (!item.empty()) {
            Rational r = parse_scalar(item, q);
            if (sgn(r) == 0) throw Bad("measure scalars must be nonzero");
            out.push_back(r);
        }
    return out;
}

std::pair<long, long> parse_interval(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw Bad("expected an interval a..b, got '" + s + "'");
    return {parse_long(s.substr(0, dots)), parse_long(s.substr(dots + 2))};
}

struct Section {
    std::string kind, name;
    int line = 0;
    std::map<std::string, Param> kv;
};

const std::map<std::string, std::set<std::string>> kKeys = {
    {"field", {"q", "descriptor", "character"}},
    {"run", {"seed", "format", "out"}},
    {"model", {"type", "slots", "shift", "pieces", "outer_shift", "inner_shift"}},
    {"triple", {"mid", "cuts", "sub_shift", "quot_shift"}},
};

class Parser {
public:
    std::vector<ParseError> errs;

    void error(int line, const std::string& msg) { errs.push_back({line, msg}); }

    std::vector<Section> sections(const std::string& text) {
        std::vector<Section> out;
        std::istringstream is(text);
        std::string raw;
        int ln = 0;
        while (std::getline(is, raw)) {
            ++ln;
            const auto hash = raw.find('#');
            const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') {
                    error(ln, "unterminated section header");
                    continue;
                }
                std::istringstream hs(line.substr(1, line.size() - 2));
                Section s;
                s.line = ln;
                hs >> s.kind >> s.name;
                std::string extra;
                if (hs >> extra) error(ln, "unexpected text in section header: '" + extra + "'");
                const bool named = s.kind == "model" || s.kind == "triple" || s.kind == "suite";
                if (!kKeys.count(s.kind) && s.kind != "suite") error(ln, "unknown section '" + s.kind + "'");
                else if (named && s.name.empty()) error(ln, "section '" + s.kind + "' needs a name");
                else if (!named && !s.name.empty()) error(ln, "section '" + s.kind + "' takes no name");
                out.push_back(std::move(s));
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                error(ln, "expected key = value");
                continue;
            }
            if (out.empty()) {
                error(ln, "key outside of any section");
                continue;
            }
            const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
            if (out.back().kv.count(key)) error(ln, "duplicate key '" + key + "'");
            out.back().kv[key] = {val, ln};
        }
        return out;
    }

    void check_keys(const Section& s) {
        if (s.kind == "suite") return;
        const auto it = kKeys.find(s.kind);
        if (it == kKeys.end()) return;
        for (const auto& [k, p] : s.kv)
            if (!it->second.count(k)) error(p.line, "unknown key '" + k + "' in [" + s.kind + "]");
    }

    template <class F>
    void guard(int line, F&& f) {
        try {
            f();
        } catch (const Bad& e) {
            error(line, e.what());
        } catch (const DomainError& e) {
            error(line, e.what());
        }
    }
};

FieldPtr field_from(const Section* s, Parser& P) {
    FieldPtr f;
    if (!s) return FqField::standard(2);
    const int ln = s->kv.count("descriptor") ? s->kv.at("descriptor").line : s->kv.count("q") ? s->kv.at("q").line : s->line;
    P.guard(ln, [&] {
        if (s->kv.count("descriptor")) {
            const Param& d = s->kv.at("descriptor");
            const auto lb = d.value.find('['), rb = d.value.find(']');
            if (lb == std::string::npos || rb == std::string::npos) throw Bad("descriptor must look like p,n,[c0,...,cn]");
            const auto head = split(d.value.substr(0, lb), ',');
            if (head.size() < 2) throw Bad("descriptor must look like p,n,[c0,...,cn]");
            std::vector<int> mod;
            for (long c : parse_longs(d.value.substr(lb + 1, rb - lb - 1))) mod.push_back(static_cast<int>(c));
            f = FqField::make(static_cast<int>(parse_long(head[0])), static_cast<int>(parse_long(head[1])), mod);
        } else if (s->kv.count("q")) {
            f = FqField::standard(static_cast<int>(parse_long(s->kv.at("q").value)));
        } else {
            f = FqField::standard(2);
        }
    });
    if (!f) return nullptr;
    if (s->kv.count("character")) {
        const Param& c = s->kv.at("character");
        if (c.value == "trivial") f = f->with_trivial_character();
        else if (c.value != "standard") P.error(c.line, "character must be standard or trivial");
    }
    return f;
}

long opt_long(const Section& s, const std::string& key, long dflt, Parser& P) {
    auto it = s.kv.find(key);
    if (it == s.kv.end()) return dflt;
    long v = dflt;
    P.guard(it->second.line, [&] { v = parse_long(it->second.value); });
    return v;
}

}  // namespace

ConfigError::ConfigError(std::vector<ParseError> errors) : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

Config parse_config(const std::string& text) {
    Parser P;
    const std::vector<Section> secs = P.sections(text);
    Config cfg;
    const Section* field = nullptr;
    int nfield = 0, nrun = 0;
    for (const auto& s : secs) {
        P.check_keys(s);
        if (s.kind == "field") {
            field = &s;
            if (++nfield > 1) P.error(s.line, "more than one [field] section");
        }
        if (s.kind == "run" && ++nrun > 1) P.error(s.line, "more than one [run] section");
    }
    cfg.field = field_from(field, P);
    if (!cfg.field) throw ConfigError(P.errs);
    const int q = cfg.field->q();

    std::set<std::string> names;
    for (const auto& s : secs) {
        if (s.kind == "run") {
            if (s.kv.count("seed")) {
                const Param& p = s.kv.at("seed");
                try {
                    std::size_t pos = 0;
                    cfg.seed = std::stoull(p.value, &pos, 0);
                    if (pos != p.value.size()) throw Bad("");
                } catch (...) {
                    P.error(p.line, "seed must be an unsigned 64-bit integer");
                }
            }
            if (s.kv.count("format")) {
                cfg.format = s.kv.at("format").value;
                if (cfg.format != "text" && cfg.format != "json") P.error(s.kv.at("format").line, "format must be text or json");
            }
            if (s.kv.count("out")) cfg.out = s.kv.at("out").value;
        } else if (s.kind == "model") {
            if (!names.insert(s.name).second) P.error(s.line, "name '" + s.name + "' declared twice");
            const std::string type = s.kv.count("type") ? s.kv.at("type").value : "c1";
            if (type == "c1") {
                for (const char* k : {"pieces", "outer_shift", "inner_shift"})
                    if (s.kv.count(k)) P.error(s.kv.at(k).line, std::string("key '") + k + "' belongs to c2 models");
                std::vector<Slot> slots;
                const int ln = s.kv.count("slots") ? s.kv.at("slots").line : s.line;
                P.guard(ln, [&] {
                    const std::string spec = s.kv.count("slots") ? s.kv.at("slots").value : "-inf..inf";
                    long label = 0;
                    for (const auto& item : split(spec, ';')) {
                        const auto [a, b] = parse_interval(item);
                        slots.push_back({label++, a, b});
                    }
                    cfg.models1[s.name] = make_model(C1Model(cfg.field, slots, opt_long(s, "shift", 0, P), s.name));
                });
            } else if (type == "c2") {
                for (const char* k : {"slots", "shift"})
                    if (s.kv.count(k)) P.error(s.kv.at(k).line, std::string("key '") + k + "' belongs to c1 models");
                const int ln = s.kv.count("pieces") ? s.kv.at("pieces").line : s.line;
                P.guard(ln, [&] {
                    const std::string spec = s.kv.count("pieces") ? s.kv.at("pieces").value : "-inf:-inf..inf";
                    std::vector<Piece> pieces;
                    for (const auto& item : split(spec, ';')) {
                        const auto colon = item.find(':');
                        if (colon == std::string::npos) throw Bad("piece must look like from:a..b, got '" + item + "'");
                        const auto [a, b] = parse_interval(item.substr(colon + 1));
                        pieces.push_back({parse_long(item.substr(0, colon)), a, b});
                    }
                    cfg.models2[s.name] = make_model(C2Model(cfg.field, pieces, opt_long(s, "outer_shift", 0, P),
                                                             opt_long(s, "inner_shift", 0, P), s.name));
                });
            } else {
                P.error(s.kv.at("type").line, "model type must be c1 or c2");
            }
        }
    }
    for (const auto& s : secs) {
        if (s.kind != "triple") continue;
        if (!names.insert(s.name).second) P.error(s.line, "name '" + s.name + "' declared twice");
        if (!s.kv.count("mid")) {
            P.error(s.line, "triple '" + s.name + "' needs mid");
            continue;
        }
        const Param& mid = s.kv.at("mid");
        const Param cuts = s.kv.count("cuts") ? s.kv.at("cuts") : Param{"", s.line};
        if (auto it = cfg.models1.find(mid.value); it != cfg.models1.end()) {
            P.guard(cuts.line, [&] {
                std::vector<long> c = parse_longs(cuts.value);
                const long sh = it->second->shift();
                cfg.triples1.emplace(s.name, TripleC1::split(it->second, c, opt_long(s, "sub_shift", sh, P),
                                                             opt_long(s, "quot_shift", sh, P)));
            });
        } else if (auto it2 = cfg.models2.find(mid.value); it2 != cfg.models2.end()) {
            for (const char* k : {"sub_shift", "quot_shift"})
                if (s.kv.count(k)) P.error(s.kv.at(k).line, std::string("key '") + k + "' belongs to c1 triples");
            P.guard(cuts.line, [&] {
                std::vector<std::pair<long, long>> c;
                for (const auto& item : split(cuts.value, ';')) {
                    if (item.empty()) continue;
                    const auto colon = item.find(':');
                    if (colon == std::string::npos) throw Bad("cut must look like from:cut, got '" + item + "'");
                    c.emplace_back(parse_long(item.substr(0, colon)), parse_long(item.substr(colon + 1)));
                }
                cfg.triples2.emplace(s.name, TripleC2::split(it2->second, c));
            });
        } else {
            P.error(mid.line, "unresolved model name '" + mid.value + "'");
        }
    }
    for (const auto& s : secs) {
        if (s.kind != "suite") continue;
        const SuiteInfo* info = find_suite(s.name);
        if (!info) {
            P.error(s.line, "unknown suite '" + s.name + "'");
            continue;
        }
        for (const auto& [k, p] : s.kv) {
            auto pi = std::find_if(info->params.begin(), info->params.end(), [&](const ParamInfo& x) { return x.key == k; });
            if (pi == info->params.end()) {
                P.error(p.line, "unknown key '" + k + "' for suite " + s.name);
                continue;
            }
            P.guard(p.line, [&] {
                switch (pi->kind) {
                    case Kind::Int: parse_long(p.value); break;
                    case Kind::IntList: parse_longs(p.value); break;
                    case Kind::Scalars: parse_scalars(p.value, q); break;
                    case Kind::Word:
                        if (std::find(pi->words.begin(), pi->words.end(), p.value) == pi->words.end())
                            throw Bad("invalid value '" + p.value + "' for " + k);
                        break;
                    case Kind::Cap: {
                        const long v = parse_long(p.value);
                        if (v < 1 || v > static_cast<long>(kTableCap))
                            throw Bad("cap violation: " + k + " = " + p.value + " exceeds the table cap " + std::to_string(kTableCap));
                        break;
                    }
                    case Kind::Dim: {
                        for (long v : parse_longs(p.value)) {
                            if (v < 0) throw Bad(k + " must be nonnegative");
                            std::size_t pts = 1;
                            for (long j = 0; j < v && pts <= kTableCap; ++j) pts *= static_cast<std::size_t>(q);
                            if (pts > kTableCap)
                                throw Bad("cap violation: q^" + std::to_string(v) + " points exceed the table cap " +
                                          std::to_string(kTableCap));
                        }
                        break;
                    }
                    case Kind::Model1:
                        for (const auto& n : split(p.value, ','))
                            if (!cfg.models1.count(n)) throw Bad("unresolved model name '" + n + "'");
                        break;
                    case Kind::Model2:
                        for (const auto& n : split(p.value, ','))
                            if (!cfg.models2.count(n)) throw Bad("unresolved model name '" + n + "'");
                        break;
                    case Kind::Triple1:
                        for (const auto& n : split(p.value, ','))
                            if (!cfg.triples1.count(n)) throw Bad("unresolved triple name '" + n + "'");
                        break;
                    case Kind::Triple2:
                        for (const auto& n : split(p.value, ','))
                            if (!cfg.triples2.count(n)) throw Bad("unresolved triple name '" + n + "'");
                        break;
                }
            });
        }
        cfg.suites.push_back({s.name, s.line, s.kv});
    }
    if (!P.errs.empty()) {
        std::stable_sort(P.errs.begin(), P.errs.end(), [](const ParseError& a, const ParseError& b) { return a.line < b.line; });
        throw ConfigError(P.errs);
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str());
}

// ---------------------------------------------------------------- suite arguments

const Param* SuiteArgs::raw(const std::string& key) const {
    auto it = spec_.params.find(key);
    return it == spec_.params.end() ? nullptr : &it->second;
}

long SuiteArgs::integer(const std::string& key, long dflt) const {
    const Param* p = raw(key);
    return p ? parse_long(p->value) : dflt;
}

std::vector<long> SuiteArgs::integers(const std::string& key, std::vector<long> dflt) const {
    const Param* p = raw(key);
    return p ? parse_longs(p->value) : dflt;
}

std::vector<Rational> SuiteArgs::scalars(const std::string& key, std::vector<Rational> dflt) const {
    const Param* p = raw(key);
    return p ? parse_scalars(p->value, cfg_.field->q()) : dflt;
}

std::string SuiteArgs::word(const std::string& key, const std::string& dflt) const {
    const Param* p = raw(key);
    return p ? p->value : dflt;
}

// ---------------------------------------------------------------- recording

std::string digest(const CycNum& c) { return c.str(); }

std::string digest(const Fn0& t) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (char ch : t[i].str() + ";") {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ULL;
        }
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h << "/" << std::dec << t.size();
    return os.str();
}

bool Recorder::check(bool ok, const std::string& identity, const std::string& where, const std::string& expected,
                     const std::string& actual) {
    ++r_.cases;
    if (!ok) r_.failures.push_back({identity, where, expected, actual});
    return ok;
}

bool Recorder::check(const Fn0& expected, const Fn0& actual, const std::string& identity, const std::string& where) {
    const bool ok = expected == actual;
    return check(ok, identity, where, ok ? "" : digest(expected), ok ? "" : digest(actual));
}

void Recorder::merge(const Compare2Report& c, const std::string& identity, const std::string& where) {
    r_.skipped += c.skipped;
    check(c.ok, identity, c.ok ? where : where + ": " + c.first_failure);
}

// ---------------------------------------------------------------- running

const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : suite_catalog())
        if (s.name == name) return &s;
    return nullptr;
}

namespace {

Report run_one(const Config& cfg, const SuiteSpec& spec, std::uint64_t seed) {
    Report r;
    r.suite = spec.name;
    r.seed = seed;
    const SuiteInfo* info = find_suite(spec.name);
    r.identities = info->identities;
    Recorder rec(r);
    SuiteArgs args(cfg, spec);
    Lcg rng(seed);
    FieldPtr f = cfg.field;
    if (args.word("fault", "none") == "psi") f = f->with_trivial_character();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        info->fn(f, args, rng, rec);
    } catch (const std::exception& e) {
        rec.check(false, "suite completed without error", e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

std::vector<Report> run_suites(const Config& cfg, const std::vector<std::string>& only) {
    std::vector<std::future<Report>> jobs;
    for (std::size_t k = 0; k < cfg.suites.size(); ++k) {
        const SuiteSpec& s = cfg.suites[k];
        if (!only.empty() && std::find(only.begin(), only.end(), s.name) == only.end()) continue;
        // Each suite draws from its own stream so results do not depend on scheduling.
        const std::uint64_t seed = cfg.seed + 0x9E3779B97F4A7C15ULL * (k + 1);
        jobs.push_back(std::async(std::launch::async, [&cfg, &s, seed] { return run_one(cfg, s, seed); }));
    }
    std::vector<Report> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

bool all_ok(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
}

void emit_report(const std::vector<Report>& reports, const std::string& format, std::ostream& os, bool timings) {
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["suites"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json j;
            j["suite"] = r.suite;
            j["seed"] = r.seed;
            j["passed"] = r.ok();
            j["cases"] = r.cases;
            j["skipped"] = r.skipped;
            j["identities"] = r.identities;
            j["failures"] = nlohmann::ordered_json::array();
            for (const auto& f : r.failures)
                j["failures"].push_back({{"identity", f.identity}, {"where", f.where}, {"expected", f.expected}, {"actual", f.actual}});
            if (timings) j["seconds"] = r.seconds;
            doc["suites"].push_back(j);
        }
        doc["passed"] = all_ok(reports);
        os << doc.dump(2) << "\n";
        return;
    }
    for (const auto& r : reports) {
        os << (r.ok() ? "PASS " : "FAIL ") << r.suite << "  cases=" << r.cases << " skipped=" << r.skipped << " seed=" << r.seed
           << " time=" << std::fixed << std::setprecision(3) << r.seconds << "s\n";
        for (const auto& id : r.identities) os << "    checks: " << id << "\n";
        const std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
        for (std::size_t k = 0; k < shown; ++k) {
            const auto& f = r.failures[k];
            os << "    violated: " << f.identity << " at " << f.where;
            if (!f.expected.empty() || !f.actual.empty()) os << " (expected " << f.expected << ", got " << f.actual << ")";
            os << "\n";
        }
        if (r.failures.size() > shown) os << "    ... " << r.failures.size() - shown << " more failures\n";
    }
    os << (all_ok(reports) ? "all suites passed" : "some suites failed") << " (" << reports.size() << " suites)\n";
}

Rational parse_scalar_value(const std::string& text, int q) {
    try {
        return parse_scalar(text, q);
    } catch (const Bad& e) {
        throw std::invalid_argument(e.what());
    }
}

std::vector<long> parse_integers(const std::string& text) {
    try {
        return parse_longs(text);
    } catch (const Bad& e) {
        throw std::invalid_argument(e.what());
    }
}

}  // namespace fh::harness
