/**
 * @file suites_dim0.cpp
 * @brief Shared generators and the finite-dimensional suites.
 */
#include "suites.hpp"

#include <sstream>

namespace fh::harness::detail {

CycNum rand_value(Lcg& rng, int p) {
    // Mostly rationals; every fourth value picks up a root of unity.
    CycNum c(p, frac(rng.uniform(-4, 4), rng.uniform(1, 3)));
    if (rng.uniform(0, 3) == 0) c += CycNum::zeta(p, rng.uniform(1, p - 1)) * Rational(rng.uniform(-2, 2));
    return c;
}

Fn0 rand_table(Lcg& rng, const FinSpace& sp) {
    Fn0 t(sp);
    bool zero = true;
    for (std::size_t v = 0; v < sp.size(); ++v) {
        t[v] = rng.uniform(0, 2) == 0 ? CycNum(sp.p()) : rand_value(rng, sp.p());
        zero = zero && t[v].is_zero();
    }
    // Never all zero: a vanishing element would make every identity hold trivially.
    if (zero) t[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(sp.size()) - 1))] = CycNum(sp.p(), Rational(1));
    return t;
}

Rational rand_scale(Lcg& rng, int q) {
    static const long nums[] = {1, 1, 1, 2, 3};
    return frac(nums[rng.uniform(0, 4)], rng.uniform(1, 2)) * qpow(q, rng.uniform(-2, 2));
}

LinMap rand_map(Lcg& rng, const FinSpace& src, const FinSpace& tgt) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(tgt.dim()), std::vector<int>(static_cast<std::size_t>(src.dim())));
    for (auto& r : rows)
        for (auto& x : r) x = static_cast<int>(rng.uniform(0, src.q() - 1));
    return {src, tgt, rows};
}

std::string win(long lo, long hi) {
    std::ostringstream os;
    os << "window (" << lo << "," << hi << ")";
    return os.str();
}

bool fits(const C1Model& m, long lo, long hi, std::size_t cap) {
    const long d = m.dim(hi) - m.dim(lo);
    std::size_t pts = 1;
    for (long k = 0; k < d; ++k) {
        pts *= static_cast<std::size_t>(m.q());
        if (pts > cap || pts > kTableCap) return false;
    }
    return true;
}

void cmp_fn(Recorder& rec, const Fn1& a, const Fn1& b, const std::string& identity, const std::string& where, long range,
            std::size_t cap) {
    const long inv = std::min(a.inv(), b.inv());
    std::string bad, ea, eb;
    int seen = 0;
    for (long lo = -range; lo <= std::min(inv, range) && bad.empty(); ++lo)
        for (long hi = lo; hi <= range && bad.empty(); ++hi) {
            if (!fits(*a.model(), lo, hi, cap)) continue;
            try {
                const Fn0 x = a.at(lo, hi), y = b.at(lo, hi);
                ++seen;
                if (x != y) {
                    bad = win(lo, hi);
                    ea = digest(y);
                    eb = digest(x);
                }
            } catch (const Unavailable&) {
                rec.skip();
            }
        }
    if (seen == 0 && bad.empty()) {
        rec.skip();
        return;
    }
    rec.check(bad.empty(), identity, bad.empty() ? where : where + ", " + bad, ea, eb);
}

void cmp_dist(Recorder& rec, const Dist1& a, const Dist1& b, const std::string& identity, const std::string& where,
              long range, std::size_t cap) {
    std::string bad, ea, eb;
    int seen = 0;
    for (long lo = -range; lo <= range && bad.empty(); ++lo)
        for (long hi = lo; hi <= range && bad.empty(); ++hi) {
            if (!fits(*a.model(), lo, hi, cap)) continue;
            try {
                const Fn0 x = a.at(lo, hi), y = b.at(lo, hi);
                ++seen;
                if (x != y) {
                    bad = win(lo, hi);
                    ea = digest(y);
                    eb = digest(x);
                }
            } catch (const Unavailable&) {
                rec.skip();
            }
        }
    if (seen == 0 && bad.empty()) {
        rec.skip();
        return;
    }
    rec.check(bad.empty(), identity, bad.empty() ? where : where + ", " + bad, ea, eb);
}

// ---------------------------------------------------------------- suites

void suite_poisson0(FieldPtr f, const SuiteArgs& args, Lcg&, Recorder& rec) {
    const long nmax = args.integer("n", 3);
    const bool wrong_measure = args.word("fault", "none") == "measure";
    for (long n = 0; n <= nmax; ++n) {
        const FinSpace v(f, static_cast<int>(n));
        for (const auto& h : enumerate_subspaces(v)) {
            const Fn0 lhs = fourier0(Fn0::indicator(h));
            Rational size = qpow(f->q(), h.dim());
            if (wrong_measure) size *= f->q();
            const Fn0 rhs = Fn0::indicator(annihilator0(h)) * size;
            std::ostringstream where;
            where << "n=" << n << " dim H=" << h.dim();
            rec.check(rhs, lhs, "F(delta_H) = #H delta_{H-perp}", where.str());
        }
    }
}

void suite_fourier0_laws(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    const long cases = args.integer("cases", 200), dmax = args.integer("max_dim", 3);
    for (long c = 0; c < cases; ++c) {
        const int m = static_cast<int>(rng.uniform(0, dmax)), k = static_cast<int>(rng.uniform(0, dmax));
        const FinSpace v(f, m), w(f, k);
        const LinMap pi = rand_map(rng, v, w);
        const LinMap pit = dual_map(pi);
        const Fn0 fv = rand_table(rng, v), gv = rand_table(rng, v), gw = rand_table(rng, w);
        std::ostringstream where;
        where << "case " << c << " dim V=" << m << " dim W=" << k;
        const Rational nv = qpow(f->q(), m), nw = qpow(f->q(), k);
        rec.check(check0(fv) * nv, fourier0(fourier0(fv)), "F(F(f)) = #V check(f)", where.str());
        const CycNum l = pairing0(fourier0(fv), gv), r = pairing0(fv, fourier0(gv));
        rec.check(l == r, "<F f, g> = <f, F g>", where.str(), digest(r), digest(l));
        rec.check(pull0(pit, fourier0(fv)), fourier0(push0(pi, fv)), "F(pi_* f) = (pi')^* F(f)", where.str());
        rec.check(push0(pit, fourier0(gw)) * (1 / nw), fourier0(pull0(pi, gw)) * (1 / nv),
                  "F(pi^* g)/#V = (pi')_*(F(g)/#W)", where.str());
    }
}

void suite_character(FieldPtr f, const SuiteArgs&, Lcg&, Recorder& rec) {
    const int q = f->q(), p = f->p();
    CycNum sum(p);
    bool nontrivial = false;
    for (int x = 0; x < q; ++x) {
        sum += psi(*f, x);
        if (psi(*f, x) != CycNum(p, Rational(1))) nontrivial = true;
        for (int y = 0; y < q; ++y) {
            const bool ok = psi(*f, f->add(x, y)) == psi(*f, x) * psi(*f, y);
            rec.check(ok, "psi(x+y) = psi(x) psi(y)", "x=" + std::to_string(x) + " y=" + std::to_string(y));
        }
    }
    rec.check(nontrivial, "psi is nontrivial", "F_" + std::to_string(q));
    rec.check(sum.is_zero(), "sum of psi over F_q vanishes", "F_" + std::to_string(q), "0", sum.str());
}

}  // namespace fh::harness::detail
