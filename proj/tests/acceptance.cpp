/**
 * @file acceptance.cpp
 * @brief Runs the verification suites at the sizes and time budgets of the
 *        project's acceptance checklist; one line per item.
 */
#include "filtharm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace fh::harness;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Run {
    std::vector<Report> reports;
    double seconds = 0;
};

Run run(const std::string& text) {
    const Config cfg = parse_config(text);
    const auto t0 = std::chrono::steady_clock::now();
    Run r{run_suites(cfg), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string field(int q) { return "[field]\nq = " + std::to_string(q) + "\n[run]\nseed = 20240601\n"; }

/// All suites pass, each with at least `min_cases` checked cases.
Outcome passing(const std::vector<Run>& runs, double budget, long min_cases = 1) {
    Outcome o;
    double total = 0;
    long cases = 0;
    for (const auto& run : runs) {
        total += run.seconds;
        for (const auto& r : run.reports) {
            cases += r.cases;
            if (!r.ok()) {
                o.ok = false;
                o.detail += r.suite + " failed (" + r.failures.front().identity + " at " + r.failures.front().where + "); ";
            }
            if (r.cases < min_cases) {
                o.ok = false;
                o.detail += r.suite + " ran only " + std::to_string(r.cases) + " cases; ";
            }
        }
    }
    if (total >= budget) {
        o.ok = false;
        o.detail += "over the time budget; ";
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld cases, %.2f s of %.0f s", cases, total, budget);
    o.detail += buf;
    return o;
}

/// The suite fails, and names `identity` among its failures.
Outcome must_fail(const std::string& text, const std::string& identity) {
    const Run r = run(text);
    Outcome o;
    const Report& rep = r.reports.front();
    std::set<std::string> named;
    for (const auto& f : rep.failures) named.insert(f.identity);
    o.ok = !rep.ok() && named.count(identity) == 1;
    const auto& ids = find_suite(rep.suite)->identities;
    for (const auto& n : named)
        if (std::find(ids.begin(), ids.end(), n) == ids.end()) o.ok = false;
    o.detail = rep.suite + ": " + std::to_string(rep.failures.size()) + " failures, names '" +
               (named.empty() ? std::string("-") : *named.begin()) + "'";
    return o;
}

}  // namespace

int main() {
    struct Item {
        int id;
        std::string what;
        std::function<Outcome()> check;
    };
    const std::string c5_suites = "[suite fubini]\ncases = 100\n[suite projection]\ncases = 100\n[suite composition]\ncases = 100\n"
                                  "[suite base_change]\ncases = 100\n[suite fourier_image]\ncases = 100\n";
    const std::vector<Item> items{
        {1, "finite Poisson formula, all subspaces, q in {2,3,4}, n <= 3",
         [] { return passing({run(field(2) + "[suite poisson0]\nn = 3\n"), run(field(3) + "[suite poisson0]\nn = 3\n"),
                              run(field(4) + "[suite poisson0]\nn = 3\n")},
                             5); }},
        {2, "finite transform laws, 200 random instances per q in {2,3}",
         [] { return passing({run(field(2) + "[suite fourier0_laws]\ncases = 200\n"),
                              run(field(3) + "[suite fourier0_laws]\ncases = 200\n")},
                             10, 800); }},
        {3, "1D Poisson formula for shifted lattices, scales 1, q, 1/q (q=2 up to 2^8 points, q=3 up to 3^7)",
         [] { return passing({run(field(2) + "[suite poisson1]\nlattices = -2..2\ncap = 256\n"),
                              run(field(3) + "[suite poisson1]\nlattices = -2..2\ncap = 2187\n")},
                             10); }},
        {4, "transforms of lattice indicators, i in -3..3",
         [] { return passing({run(field(2) + "[suite haar_lattice_fourier]\nlevels = -3..3\n")}, 2, 7); }},
        {5, "Fubini, projection, composition, base change, Fourier images: 100 instances each",
         [&] { return passing({run(field(2) + c5_suites)}, 30, 100); }},
        {6, "virtual measures: associativity, canonical composition, duality, |i| <= 4",
         [] { return passing({run(field(2) + "[suite virtual_measure]\nrange = 4\n")}, 2); }},
        {7, "2D Poisson formula for characteristic functions, q=2, up to 2^8 points",
         [] { return passing({run(field(2) + "[suite poisson2_II]\ncap = 256\n")}, 30); }},
        {8, "2D Poisson formula for characteristic distributions, rescaled measures and both corollaries",
         [] { return passing({run(field(2) + "[suite poisson2_I]\ncorollary = yes\nscales = 1, q, 1/q\n")}, 30); }},
        {9, "central extension group law, representations, Fourier intertwining",
         [] { return passing({run(field(2) + "[suite central_ext]\ncases = 100\n[suite representation]\ncases = 100\n"
                                             "[suite fourier_intertwine]\ncases = 100\n")},
                             30, 100); }},
        {10, "2D composition and base change (16 formulas), 2D Fourier images (8 diagrams)",
         [] { return passing({run(field(2) + "[suite base_change2]\ncases = 60\n[suite fourier_image2]\ncases = 60\n")}, 60, 60); }},
        {11, "negative controls: corrupted character, transition map, measure scalar",
         [] {
             const Outcome parts[] = {
                 must_fail(field(3) + "[suite character]\nfault = psi\n", "psi is nontrivial"),
                 must_fail(field(3) + "[suite poisson0]\nn = 2\nfault = psi\n", "F(delta_H) = #H delta_{H-perp}"),
                 must_fail(field(3) + "[suite poisson1]\nfault = transition\n", "F(delta_{E1,mu1}) = delta_{E3^,mu1/mu2}"),
                 must_fail(field(3) + "[suite poisson1]\nfault = measure\n", "F(delta_{E1,mu1}) = delta_{E3^,mu1/mu2}"),
                 must_fail(field(3) + "[suite poisson0]\nn = 2\nfault = measure\n", "F(delta_H) = #H delta_{H-perp}"),
                 must_fail(field(2) + "[suite poisson2_I]\nfault = measure\n", "F(delta_{E1,mu x nu}) = delta_{E3^,nu x mu}"),
             };
             Outcome o;
             for (const auto& p : parts) {
                 o.ok = o.ok && p.ok;
                 o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
             }
             return o;
         }},
    };

    int failed = 0;
    for (const auto& it : items) {
        Outcome o;
        try {
            o = it.check();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        std::printf("criterion %2d: %s  %s [%s]\n", it.id, o.ok ? "PASS" : "FAIL", it.what.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
    return failed == 0 ? 0 : 1;
}
