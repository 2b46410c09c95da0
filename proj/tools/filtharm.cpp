/**
 * @file filtharm.cpp
 * @brief Command-line front end: verify, transform, dump.
 */
#include "filtharm/harness.hpp"
#include "filtharm/table_csv.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fh;
using namespace fh::harness;

namespace {

/// Usage, config and I/O problems; reported with exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> colon_split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ':')) out.push_back(cur);
    return out;
}

long one_long(const std::string& s) {
    const auto v = parse_integers(s);
    if (v.size() != 1) throw std::invalid_argument("expected one integer, got '" + s + "'");
    return v[0];
}

std::vector<long> bounds(const std::string& spec, std::size_t n) {
    const auto v = parse_integers(spec);
    if (v.size() != n) throw std::invalid_argument("window '" + spec + "' needs " + std::to_string(n) + " bounds");
    return v;
}

/// Writes to `path`, or stdout when it is empty or "-".
template <class F>
void with_output(const std::string& path, F&& body) {
    if (path.empty() || path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw UsageError("cannot write " + path);
    body(os);
}

ModelPtr find_model1(const Config& cfg, const std::string& name) {
    const auto it = cfg.models1.find(name);
    return it == cfg.models1.end() ? nullptr : it->second;
}

C2Ptr find_model2(const Config& cfg, const std::string& name) {
    const auto it = cfg.models2.find(name);
    return it == cfg.models2.end() ? nullptr : it->second;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    std::string config, format, out;
    std::vector<std::string> suites;
    std::uint64_t seed = 0;
    bool seed_set = false, timings = false;
};

int run_verify(const VerifyOpts& o) {
    Config cfg = load_config(o.config);
    if (o.seed_set) cfg.seed = o.seed;
    const std::string format = o.format.empty() ? cfg.format : o.format;
    const std::string out = o.out.empty() ? cfg.out : o.out;
    for (const auto& s : o.suites)
        if (!find_suite(s)) throw UsageError("unknown suite '" + s + "'");
    const auto reports = run_suites(cfg, o.suites);
    with_output(out, [&](std::ostream& os) { emit_report(reports, format, os, o.timings); });
    return all_ok(reports) ? 0 : 1;
}

// ---------------------------------------------------------------- transform

struct TransformOpts {
    std::string config, op, input, out, model, scale = "1";
    long basepoint = 0;
};

int run_transform(const TransformOpts& o) {
    const Config cfg = load_config(o.config);
    std::ifstream is(o.input);
    if (!is) throw UsageError("cannot read " + o.input);
    const CsvTable in = read_csv_table(is, cfg.field);

    Fn0 result;
    std::vector<long> window;
    if (o.op == "fourier0") {
        result = fourier0(in.table);
    } else if (o.op == "fourier1") {
        const ModelPtr m = find_model1(cfg, o.model);
        if (!m) throw UsageError("fourier1 needs --model naming a one-dimensional model");
        if (in.window.size() != 2) throw UsageError("fourier1 input needs a 'window,lo,hi' line");
        const long lo = in.window[0], hi = in.window[1];
        const Fn1 f = Fn1::from_window(m, lo, hi, in.table);
        const Haar mu(m, parse_scalar_value(o.scale, cfg.field->q()));
        result = fourier1(f, mu).at(-hi, -lo);
        window = {-hi, -lo};
    } else if (o.op == "fourier2") {
        const C2Ptr m = find_model2(cfg, o.model);
        if (!m) throw UsageError("fourier2 needs --model naming a two-dimensional model");
        if (in.window.size() != 4) throw UsageError("fourier2 input needs a 'biwindow,l,i,lo,hi' line");
        const long l = in.window[0], i = in.window[1], lo = in.window[2], hi = in.window[3];
        const D2Elem x = D2Elem::from_biwindow(m, o.basepoint, l, i, lo, hi, in.table);
        result = fourier2(x).at(-i, -l).at(-hi, -lo);
        window = {-i, -l, -hi, -lo};
    } else {
        throw UsageError("unknown op '" + o.op + "'");
    }
    with_output(o.out, [&](std::ostream& os) { write_csv_table(os, result, window); });
    return 0;
}

// ---------------------------------------------------------------- dump

struct DumpOpts {
    std::string config, model, window, elem, out;
};

Fn0 dump1(const Config& cfg, const ModelPtr& m, const std::string& window, const std::string& elem) {
    const auto w = bounds(window, 2);
    const auto e = colon_split(elem);
    const int q = cfg.field->q();
    const auto need = [&](std::size_t n) {
        if (e.size() != n) throw std::invalid_argument("element '" + elem + "' has the wrong number of fields");
    };
    if (e.empty()) throw std::invalid_argument("empty element");
    if (e[0] == "indicator") {
        need(2);
        return Fn1::indicator(m, one_long(e[1])).at(w[0], w[1]);
    }
    if (e[0] == "haar") {
        need(2);
        return Dist1::haar(Haar(m, parse_scalar_value(e[1], q))).at(w[0], w[1]);
    }
    if (e[0] == "delta0") {
        need(1);
        return Dist1::delta0(m).at(w[0], w[1]);
    }
    if (e[0] == "chardist") {
        need(3);
        const auto it = cfg.triples1.find(e[1]);
        if (it == cfg.triples1.end()) throw std::invalid_argument("no one-dimensional triple '" + e[1] + "'");
        if (it->second.mid().get() != m.get()) throw std::invalid_argument("triple '" + e[1] + "' is not over this model");
        return char_dist1(it->second, Haar(it->second.sub(), parse_scalar_value(e[2], q))).at(w[0], w[1]);
    }
    throw std::invalid_argument("unknown element '" + e[0] + "' for a one-dimensional model");
}

Fn0 dump2(const Config& cfg, const C2Ptr& m, const std::string& window, const std::string& elem) {
    const auto w = bounds(window, 4);
    const auto e = colon_split(elem);
    const int q = cfg.field->q();
    const auto need = [&](std::size_t n) {
        if (e.size() != n) throw std::invalid_argument("element '" + elem + "' has the wrong number of fields");
    };
    const auto of_triple = [&](const std::string& name) {
        const auto it = cfg.triples2.find(name);
        if (it == cfg.triples2.end()) throw std::invalid_argument("no two-dimensional triple '" + name + "'");
        if (it->second.mid().get() != m.get()) throw std::invalid_argument("triple '" + name + "' is not over this model");
        return it->second;
    };
    const auto fn = [&](const D2Elem& x) { return x.at(w[0], w[1]).at(w[2], w[3]); };
    const auto dist = [&](const D2Dist& g) { return g.at(w[0], w[1]).at(w[2], w[3]); };
    if (e.empty()) throw std::invalid_argument("empty element");
    if (e[0] == "one") {
        need(2);
        return fn(one(m, one_long(e[1])));
    }
    if (e[0] == "delta0") {
        need(2);
        return fn(delta0(m, one_long(e[1])));
    }
    if (e[0] == "onemu") {
        need(3);
        return dist(one_mu(m, one_long(e[1]), parse_scalar_value(e[2], q)));
    }
    if (e[0] == "deltanu") {
        need(3);
        return dist(delta_nu(m, one_long(e[1]), parse_scalar_value(e[2], q)));
    }
    if (e[0] == "charfn") {
        need(3);
        return fn(char_fn(of_triple(e[1]), one_long(e[2])));
    }
    if (e[0] == "chardist") {
        need(5);
        return dist(char_dist(of_triple(e[1]), one_long(e[2]), parse_scalar_value(e[3], q), parse_scalar_value(e[4], q)));
    }
    throw std::invalid_argument("unknown element '" + e[0] + "' for a two-dimensional model");
}

int run_dump(const DumpOpts& o) {
    const Config cfg = load_config(o.config);
    Fn0 t;
    std::vector<long> w;
    if (const ModelPtr m1 = find_model1(cfg, o.model)) {
        t = dump1(cfg, m1, o.window, o.elem);
        w = bounds(o.window, 2);
    } else if (const C2Ptr m2 = find_model2(cfg, o.model)) {
        t = dump2(cfg, m2, o.window, o.elem);
        w = bounds(o.window, 4);
    } else {
        throw UsageError("no model '" + o.model + "' in " + o.config);
    }
    with_output(o.out, [&](std::ostream& os) { write_csv_table(os, t, w); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact harmonic analysis on filtered vector spaces over finite fields"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Run the verification suites of a config");
    verify->add_option("config", vo.config, "Config file")->required();
    verify->add_option("--suite", vo.suites, "Run only these suites (repeatable)");
    auto* seed = verify->add_option("--seed", vo.seed, "Override the config seed");
    verify->add_option("--format", vo.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", vo.out, "Report path (default stdout)");
    verify->add_flag("--timings", vo.timings, "Include wall times in JSON reports");

    TransformOpts to;
    auto* transform = app.add_subcommand("transform", "Fourier transform of a CSV table");
    transform->add_option("config", to.config, "Config file")->required();
    transform->add_option("--op", to.op, "Transform")->required()->check(CLI::IsMember({"fourier0", "fourier1", "fourier2"}));
    transform->add_option("--input", to.input, "Input CSV")->required();
    transform->add_option("--out", to.out, "Output CSV (default stdout)")->required();
    transform->add_option("--model", to.model, "Model for fourier1 and fourier2");
    transform->add_option("--scale", to.scale, "Haar scale for fourier1, e.g. 1 or q^-1");
    transform->add_option("--basepoint", to.basepoint, "Basepoint o for fourier2");

    DumpOpts dumpo;
    auto* dump = app.add_subcommand("dump", "Tabulate a canonical element on a window");
    dump->add_option("config", dumpo.config, "Config file")->required();
    dump->add_option("--model", dumpo.model, "Model name")->required();
    dump->add_option("--window", dumpo.window, "lo,hi (1D) or l,i,lo,hi (2D)")->required();
    dump->add_option("--elem", dumpo.elem,
                     "1D: indicator:I | haar:S | delta0 | chardist:TRIPLE:S; "
                     "2D: one:O | delta0:O | onemu:O:S | deltanu:O:S | charfn:TRIPLE:O | chardist:TRIPLE:O:MU:NU")
        ->required();
    dump->add_option("--out", dumpo.out, "Output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    vo.seed_set = seed->count() > 0;

    try {
        if (*verify) return run_verify(vo);
        if (*transform) return run_transform(to);
        return run_dump(dumpo);
    } catch (const ConfigError& e) {
        for (const auto& pe : e.errors()) std::cerr << "line " << pe.line << ": " << pe.message << '\n';
        return 2;
    } catch (const CsvError& e) {
        std::cerr << "input: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
