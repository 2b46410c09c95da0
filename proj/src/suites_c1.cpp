/**
 * @file suites_c1.cpp
 * @brief One-dimensional suites: Poisson formula, lattice transforms, and
 *        the calculus of direct and inverse images on random interval layouts.
 */
#include "suites.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace fh::harness::detail {

namespace {

using Points = std::vector<std::array<long, 4>>;

std::string show(long x) { return x >= kInf / 2 ? "inf" : (x <= -kInf / 2 ? "-inf" : std::to_string(x)); }

std::string describe(const Points& pts) {
    std::ostringstream os;
    os << "layout";
    for (const auto& p : pts) os << " [" << show(p[0]) << "," << show(p[1]) << "," << show(p[2]) << "," << show(p[3]) << "]";
    return os.str();
}

/// Sorted cut points x0 <= x1 <= x2 <= x3 per slot; ends are often infinite.
Points rand_points(Lcg& rng) {
    Points pts(static_cast<std::size_t>(rng.uniform(1, 2)));
    for (auto& p : pts) {
        for (auto& x : p) {
            const long r = rng.uniform(0, 9);
            x = r == 0 ? -kInf : (r == 1 ? kInf : rng.uniform(-2, 2));
        }
        std::sort(p.begin(), p.end());
        if (rng.uniform(0, 2) == 0) p[0] = -kInf;
        if (rng.uniform(0, 2) == 0) p[3] = kInf;
    }
    return pts;
}

/// The model spanned by coordinates [x_i, x_j) in every slot.
ModelPtr part(const FieldPtr& f, const Points& pts, int i, int j, const std::string& name) {
    std::vector<Slot> slots;
    for (std::size_t s = 0; s < pts.size(); ++s)
        if (pts[s][static_cast<std::size_t>(i)] < pts[s][static_cast<std::size_t>(j)])
            slots.push_back({static_cast<long>(s), pts[s][static_cast<std::size_t>(i)], pts[s][static_cast<std::size_t>(j)]});
    return make_model(C1Model(f, slots, 0, name));
}

struct Window {
    long lo, hi;
};

Window rand_window(Lcg& rng, const C1Model& m) {
    long lo = rng.uniform(-2, 1), hi = lo + rng.uniform(0, 2);
    while (hi > lo && !fits(m, lo, hi, 64)) --hi;
    return {lo, hi};
}

Fn1 rand_D(Lcg& rng, const ModelPtr& m) {
    const Window w = rand_window(rng, *m);
    return Fn1::from_window(m, w.lo, w.hi, rand_table(rng, m->window_space(w.lo, w.hi)));
}

Fn1 rand_E(Lcg& rng, const ModelPtr& m) {
    const Window w = rand_window(rng, *m);
    return Fn1::cylinder(m, w.lo, w.hi, rand_table(rng, m->window_space(w.lo, w.hi)));
}

/// Compactly supported distribution.
Dist1 rand_Ep(Lcg& rng, const ModelPtr& m) {
    const Window w = rand_window(rng, *m);
    Dist1 g = Dist1::from_window(m, w.lo, w.hi, rand_table(rng, m->window_space(w.lo, w.hi)));
    if (rng.coin()) g = g + Dist1::density(rand_D(rng, m), Haar(m, rand_scale(rng, m->q())));
    return g;
}

/// General distribution: a compact part plus a density of a locally constant function.
Dist1 rand_Dp(Lcg& rng, const ModelPtr& m) {
    return rand_Ep(rng, m) + Dist1::density(rand_E(rng, m), Haar(m, rand_scale(rng, m->q())));
}

struct Ctx {
    FieldPtr f;
    Lcg& rng;
    Recorder& rec;
    long range;
    std::size_t cap;
    long cases;
};

/// Draws layouts until `hyp` holds, then runs `body` once.
template <class Hyp, class Body>
void repeat(Ctx& c, Hyp hyp, Body body) {
    for (long k = 0; k < c.cases; ++k) {
        Points pts;
        for (int tries = 0;; ++tries) {
            pts = rand_points(c.rng);
            if (hyp(pts)) break;
            if (tries > 1000) throw DomainError("no layout satisfies the hypotheses");
        }
        const std::string where = describe(pts);
        try {
            body(pts, where);
        } catch (const DomainError& e) {
            c.rec.check(false, "evaluation", where, "", e.what());
        }
    }
}

bool compact(const FieldPtr& f, const Points& p, int i, int j) { return part(f, p, i, j, "")->compact(); }
bool discrete(const FieldPtr& f, const Points& p, int i, int j) { return part(f, p, i, j, "")->discrete(); }

Ctx ctx_of(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec, long cases_default) {
    return {std::move(f), rng, rec, args.integer("range", 3), static_cast<std::size_t>(args.integer("cap", 256)),
            args.integer("cases", cases_default)};
}

/// One triple per slot split: sub = [x_i,x_j), mid = [x_i,x_k), quot = [x_j,x_k).
TripleC1 triple(const FieldPtr& f, const Points& p, int i, int j, int k, const char* names) {
    const std::string n(names);
    return {part(f, p, i, j, n.substr(0, 1)), part(f, p, i, k, n.substr(1, 1)), part(f, p, j, k, n.substr(2, 1))};
}

// Deliberately wrong transition for negative controls: tables are copied
// across windows instead of being summed over fibers.
Dist1 corrupt_transitions(const Dist1& g) {
    const C1Model* m = g.model().get();
    return {g.model(), g.tag(), g.supp(), std::nullopt, std::nullopt, [g, m](long lo, long hi) {
                return coord_pull(g.at(lo - 1, hi), m->window_space(lo, hi), m->coords(lo - 1, hi), m->coords(lo, hi));
            }};
}

}  // namespace

// ---------------------------------------------------------------- Poisson and lattices

void suite_poisson1(FieldPtr f, const SuiteArgs& args, Lcg&, Recorder& rec) {
    const long range = args.integer("range", 5);
    const std::size_t cap = static_cast<std::size_t>(args.integer("cap", 256));
    const std::vector<Rational> scales = args.scalars("scales", {1, f->q(), Rational(1, f->q())});
    const std::string fault = args.word("fault", "none");
    std::vector<std::pair<std::string, TripleC1>> triples;
    if (args.has("triples")) {
        std::istringstream is(args.word("triples", ""));
        std::string name;
        while (std::getline(is, name, ',')) {
            name.erase(0, name.find_first_not_of(' '));
            name.erase(name.find_last_not_of(' ') + 1);
            const TripleC1& t = args.config().triples1.at(name);
            // Suites may run on a field with a corrupted character; rebuild on it.
            auto rebuild = [&](const ModelPtr& m) { return make_model(C1Model(f, m->slots(), m->shift(), m->name())); };
            triples.emplace_back(name, TripleC1(rebuild(t.sub()), rebuild(t.mid()), rebuild(t.quot())));
        }
    } else {
        const ModelPtr k = make_model(C1Model::laurent(f));
        for (long m : args.integers("lattices", {-2, -1, 0, 1, 2}))
            triples.emplace_back("t^" + std::to_string(m) + "O in K", TripleC1::split(k, {-m}, 0, 0));
    }
    const std::string id = "F(delta_{E1,mu1}) = delta_{E3^,mu1/mu2}";
    for (const auto& [name, T] : triples) {
        const TripleC1 D = T.dual();
        for (const auto& s1 : scales)
            for (const auto& s2 : scales) {
                Dist1 lhs = fourier1_dist(char_dist1(T, Haar(T.sub(), s1)), Haar(T.mid(), s2), D.mid());
                Rational s3 = s1 / s2;
                if (fault == "measure") s3 *= f->q();
                if (fault == "transition") lhs = corrupt_transitions(lhs);
                const Dist1 rhs = char_dist1(D, Haar(D.sub(), s3));
                cmp_dist(rec, lhs, rhs, id, name + " mu1=" + s1.get_str() + " mu2=" + s2.get_str(), range, cap);
            }
    }
}

void suite_haar_lattice_fourier(FieldPtr f, const SuiteArgs& args, Lcg&, Recorder& rec) {
    const long range = args.integer("range", 6);
    const std::size_t cap = static_cast<std::size_t>(args.integer("cap", 256));
    const ModelPtr k = make_model(C1Model::laurent(f));
    const ModelPtr kd = make_model(k->dual());
    for (long i : args.integers("levels", {-3, -2, -1, 0, 1, 2, 3}))
        for (const auto& s : args.scalars("scales", {1, f->q(), Rational(1, f->q())})) {
            const Haar mu(k, s);
            const Fn1 lhs = fourier1(Fn1::indicator(k, i), mu, kd);
            const Fn1 rhs = Fn1::indicator(kd, -i).scaled(CycNum(f->p(), mu.value(i)));
            cmp_fn(rec, lhs, rhs, "F_mu(delta_{F(i)}) = mu(F(i)) delta_{F(i)-perp}", "i=" + std::to_string(i) + " mu=" + s.get_str(),
                   range, cap);
        }
}

void suite_fourier1_laws(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    Ctx c = ctx_of(f, args, rng, rec, 100);
    repeat(c, [](const Points&) { return true; }, [&](const Points& p, const std::string& where) {
        const ModelPtr m = part(f, p, 0, 3, "V");
        const ModelPtr md = make_model(m->dual());
        const Haar mu(m, rand_scale(rng, f->q()));
        const Fn1 x = rand_D(rng, m);
        cmp_fn(rec, fourier1(fourier1(x, mu, md), mu.dual(md), m), x.checked(), "F_{mu^} F_mu f = check f", where, c.range, c.cap);
        const Dist1 g = rand_Dp(rng, m);
        const Fn1 y = rand_D(rng, md);
        const CycNum l = fourier1_dist(g, mu, md).apply(y), r = g.apply(fourier1(y, mu.dual(md), m));
        rec.check(l == r, "F(G)(g) = G(F g)", where, digest(r), digest(l));
        cmp_dist(rec, fourier1_dist(Dist1::haar(mu), mu, md), Dist1::delta0(md), "F(mu) = delta_0", where, c.range, c.cap);
        cmp_dist(rec, fourier1_e(Fn1::constant(m, CycNum(f->p(), Rational(1))), md), Dist1::delta0(md), "F(1) = delta_0", where,
                 c.range, c.cap);
    });
}

// ---------------------------------------------------------------- Fubini and projection formulas

void suite_fubini(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    Ctx c = ctx_of(f, args, rng, rec, 100);
    repeat(c, [](const Points&) { return true; }, [&](const Points& p, const std::string& where) {
        const TripleC1 T = triple(f, p, 0, 1, 3, "123");
        const Rational s1 = rand_scale(rng, f->q()), s3 = rand_scale(rng, f->q());
        const Fn1 x = rand_D(rng, T.mid());
        const CycNum l = integrate(push_beta(T, x, Haar(T.sub(), s1)), Haar(T.quot(), s3));
        const CycNum r = integrate(x, Haar(T.mid(), s1 * s3));
        rec.check(l == r, "int_E3 beta_*(f mu1) dmu3 = int_E2 f dmu2", where, digest(r), digest(l));
    });
}

void suite_projection(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    Ctx c = ctx_of(f, args, rng, rec, 100);
    auto any = [](const Points&) { return true; };
    auto sub_compact = [&](const Points& p) { return compact(f, p, 0, 1); };
    auto quot_discrete = [&](const Points& p) { return discrete(f, p, 1, 3); };
    auto T_of = [&](const Points& p) { return triple(f, p, 0, 1, 3, "123"); };
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p);
        const Haar mu1(T.sub(), rand_scale(rng, f->q()));
        const Fn1 x = rand_D(rng, T.mid()), g = rand_E(rng, T.quot());
        cmp_fn(rec, push_beta(T, x * pull_beta(T, g), mu1), push_beta(T, x, mu1) * g, "beta_*(f beta^*g mu1) = beta_*(f mu1) g on D",
               w, c.range, c.cap);
    });
    repeat(c, sub_compact, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p);
        const Haar mu1(T.sub(), rand_scale(rng, f->q()));
        const Fn1 x = rand_E(rng, T.mid()), g = rand_E(rng, T.quot());
        cmp_fn(rec, push_beta(T, x * pull_beta(T, g), mu1), push_beta(T, x, mu1) * g, "beta_*(f beta^*g mu1) = beta_*(f mu1) g on E",
               w, c.range, c.cap);
    });
    repeat(c, quot_discrete, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p);
        const Fn1 x = rand_E(rng, T.sub()), g = rand_E(rng, T.mid());
        cmp_fn(rec, push_alpha(T, x * pull_alpha(T, g)), push_alpha(T, x) * g, "alpha_*(f alpha^*g) = alpha_*(f) g", w, c.range,
               c.cap);
    });
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p);
        const Rational s1 = rand_scale(rng, f->q()), s3 = rand_scale(rng, f->q());
        const Fn1 g = rand_E(rng, T.quot());
        cmp_dist(rec, i_mu(pull_beta(T, g), Haar(T.mid(), s1 * s3)), pull_beta(T, i_mu(g, Haar(T.quot(), s3)), Haar(T.sub(), s1)),
                 "I_mu2(beta^* g) = beta^*(I_mu3 g)", w, c.range, c.cap);
    });
    repeat(c, sub_compact, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p);
        const Rational s1 = rand_scale(rng, f->q()), s3 = rand_scale(rng, f->q());
        const Fn1 x = rand_E(rng, T.mid());
        cmp_dist(rec, i_mu(push_beta(T, x, Haar(T.sub(), s1)), Haar(T.quot(), s3)), push_beta(T, i_mu(x, Haar(T.mid(), s1 * s3))),
                 "I_mu3(beta_*(f mu1)) = beta_*(I_mu2 f)", w, c.range, c.cap);
    });
}

// ---------------------------------------------------------------- composition

void suite_composition(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    Ctx c = ctx_of(f, args, rng, rec, 100);
    auto any = [](const Points&) { return true; };
    // Epimorphisms H -> E2 -> E3 with kernels L = [x0,x1), E1 = [x1,x2); H' = [x0,x2).
    struct Epi {
        TripleC1 b1, b, bb;  // (L,H,E2), (E1,E2,E3), (H',H,E3)
    };
    auto epi = [&](const Points& p) {
        return Epi{triple(f, p, 0, 1, 3, "LHE"), triple(f, p, 1, 2, 3, "123"), triple(f, p, 0, 2, 3, "PH3")};
    };
    auto kernels_compact = [&](const Points& p) { return compact(f, p, 0, 1) && compact(f, p, 1, 2); };
    auto push_b = [&](const Points& p, bool on_e, const std::string& id) {
        repeat(c, on_e ? std::function<bool(const Points&)>(kernels_compact) : std::function<bool(const Points&)>(any),
               [&](const Points& q, const std::string& w) {
                   const Epi e = epi(q);
                   const Rational n = rand_scale(rng, f->q()), m = rand_scale(rng, f->q());
                   const Fn1 x = on_e ? rand_E(rng, e.bb.mid()) : rand_D(rng, e.bb.mid());
                   cmp_fn(rec, push_beta(e.bb, x, Haar(e.bb.sub(), n * m)),
                          push_beta(e.b, push_beta(e.b1, x, Haar(e.b1.sub(), n)), Haar(e.b.sub(), m)), id, w, c.range, c.cap);
               });
        (void)p;
    };
    auto pull_b_dist = [&](bool compact_support, const std::string& id) {
        repeat(c, any, [&](const Points& q, const std::string& w) {
            const Epi e = epi(q);
            const Rational n = rand_scale(rng, f->q()), m = rand_scale(rng, f->q());
            const Dist1 g = compact_support ? rand_Ep(rng, e.b.quot()) : rand_Dp(rng, e.b.quot());
            cmp_dist(rec, pull_beta(e.bb, g, Haar(e.bb.sub(), n * m)),
                     pull_beta(e.b1, pull_beta(e.b, g, Haar(e.b.sub(), m)), Haar(e.b1.sub(), n)), id, w, c.range, c.cap);
        });
    };
    auto pull_b_fn = [&](bool on_d, const std::string& id) {
        repeat(c, on_d ? std::function<bool(const Points&)>(kernels_compact) : std::function<bool(const Points&)>(any),
               [&](const Points& q, const std::string& w) {
                   const Epi e = epi(q);
                   const Fn1 g = on_d ? rand_D(rng, e.b.quot()) : rand_E(rng, e.b.quot());
                   cmp_fn(rec, pull_beta(e.bb, g), pull_beta(e.b1, pull_beta(e.b, g)), id, w, c.range, c.cap);
               });
    };
    auto push_b_dist = [&](bool on_dp, const std::string& id) {
        repeat(c, on_dp ? std::function<bool(const Points&)>(kernels_compact) : std::function<bool(const Points&)>(any),
               [&](const Points& q, const std::string& w) {
                   const Epi e = epi(q);
                   const Dist1 g = on_dp ? rand_Dp(rng, e.bb.mid()) : rand_Ep(rng, e.bb.mid());
                   cmp_dist(rec, push_beta(e.bb, g), push_beta(e.b, push_beta(e.b1, g)), id, w, c.range, c.cap);
               });
    };
    push_b({}, false, "(beta beta')_*(f nu mu) = beta_*(beta'_*(f nu) mu) on D");
    pull_b_dist(false, "(beta beta')^*(G nu mu) = beta'^*(beta^*(G mu) nu) on D'");
    pull_b_fn(false, "(beta beta')^* f = beta'^* beta^* f on E");
    push_b_dist(false, "(beta beta')_* G = beta_* beta'_* G on compactly supported E~'");
    pull_b_fn(true, "(beta beta')^* f = beta'^* beta^* f on D");
    push_b_dist(true, "(beta beta')_* G = beta_* beta'_* G on D'");
    push_b({}, true, "(beta beta')_*(f nu mu) = beta_*(beta'_*(f nu) mu) on E");
    pull_b_dist(true, "(beta beta')^*(G nu mu) = beta'^*(beta^*(G mu) nu) on E~'");

    // Monomorphisms E1 -> E2 -> H' with E1 = [x0,x1), E2 = [x0,x2), H' = [x0,x3).
    struct Mono {
        TripleC1 a, a1, aa;  // (E1,E2,E3), (E2,H',L'), (E1,H',Q)
    };
    auto mono = [&](const Points& p) {
        return Mono{triple(f, p, 0, 1, 2, "123"), triple(f, p, 0, 2, 3, "2HL"), triple(f, p, 0, 1, 3, "1HQ")};
    };
    auto cokernels_discrete = [&](const Points& p) { return discrete(f, p, 1, 2) && discrete(f, p, 2, 3); };
    auto sel = [&](bool h) {
        return h ? std::function<bool(const Points&)>(cokernels_discrete) : std::function<bool(const Points&)>(any);
    };
    auto pull_a_fn = [&](bool on_e, const std::string& id) {
        repeat(c, any, [&](const Points& q, const std::string& w) {
            const Mono e = mono(q);
            const Fn1 x = on_e ? rand_E(rng, e.aa.mid()) : rand_D(rng, e.aa.mid());
            cmp_fn(rec, pull_alpha(e.aa, x), pull_alpha(e.a, pull_alpha(e.a1, x)), id, w, c.range, c.cap);
        });
    };
    auto push_a_dist = [&](bool compact_support, const std::string& id) {
        repeat(c, any, [&](const Points& q, const std::string& w) {
            const Mono e = mono(q);
            const Dist1 g = compact_support ? rand_Ep(rng, e.a.sub()) : rand_Dp(rng, e.a.sub());
            cmp_dist(rec, push_alpha(e.aa, g), push_alpha(e.a1, push_alpha(e.a, g)), id, w, c.range, c.cap);
        });
    };
    auto push_a_fn = [&](bool on_e, const std::string& id) {
        repeat(c, sel(true), [&](const Points& q, const std::string& w) {
            const Mono e = mono(q);
            const Fn1 x = on_e ? rand_E(rng, e.a.sub()) : rand_D(rng, e.a.sub());
            cmp_fn(rec, push_alpha(e.aa, x), push_alpha(e.a1, push_alpha(e.a, x)), id, w, c.range, c.cap);
        });
    };
    auto pull_a_dist = [&](bool compact_support, const std::string& id) {
        repeat(c, sel(true), [&](const Points& q, const std::string& w) {
            const Mono e = mono(q);
            const Dist1 g = compact_support ? rand_Ep(rng, e.aa.mid()) : rand_Dp(rng, e.aa.mid());
            cmp_dist(rec, pull_alpha(e.aa, g), pull_alpha(e.a, pull_alpha(e.a1, g)), id, w, c.range, c.cap);
        });
    };
    pull_a_fn(false, "(alpha' alpha)^* f = alpha^* alpha'^* f on D");
    push_a_dist(false, "(alpha' alpha)_* G = alpha'_* alpha_* G on D'");
    pull_a_fn(true, "(alpha' alpha)^* f = alpha^* alpha'^* f on E");
    push_a_dist(true, "(alpha' alpha)_* G = alpha'_* alpha_* G on E~'");
    push_a_fn(false, "(alpha' alpha)_* f = alpha'_* alpha_* f on D");
    pull_a_dist(false, "(alpha' alpha)^* G = alpha^* alpha'^* G on D'");
    push_a_fn(true, "(alpha' alpha)_* f = alpha'_* alpha_* f on E");
    pull_a_dist(true, "(alpha' alpha)^* G = alpha^* alpha'^* G on E~'");
}

// ---------------------------------------------------------------- base change

void suite_base_change(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    Ctx c = ctx_of(f, args, rng, rec, 100);
    // E2 = [x0,x3), E1 = [x0,x1), E3 = [x1,x3), D = [x1,x2), B = [x2,x3), X' = [x0,x2).
    struct Square {
        TripleC1 b;    // (E1, E2, E3)
        TripleC1 g;    // (D, E3, B): gamma = alpha
        TripleC1 bg;   // (X', E2, B): beta_gamma = alpha
        TripleC1 gb;   // (E1, X', D): gamma_beta = beta
    };
    auto sq = [&](const Points& p) {
        return Square{triple(f, p, 0, 1, 3, "123"), triple(f, p, 1, 2, 3, "D3B"), triple(f, p, 0, 2, 3, "X2B"),
                      triple(f, p, 0, 1, 2, "1XD")};
    };
    auto any = [](const Points&) { return true; };
    auto e1c = [&](const Points& p) { return compact(f, p, 0, 1); };
    auto bd = [&](const Points& p) { return discrete(f, p, 2, 3); };
    auto both = [&](const Points& p) { return compact(f, p, 0, 1) && discrete(f, p, 2, 3); };
    using Hyp = std::function<bool(const Points&)>;

    auto f1 = [&](Hyp h, bool on_e, const std::string& id) {  // gamma^* beta_* = gamma_beta_* beta_gamma^*
        repeat(c, h, [&](const Points& p, const std::string& w) {
            const Square s = sq(p);
            const Rational m = rand_scale(rng, f->q());
            const Fn1 x = on_e ? rand_E(rng, s.b.mid()) : rand_D(rng, s.b.mid());
            cmp_fn(rec, pull_alpha(s.g, push_beta(s.b, x, Haar(s.b.sub(), m))),
                   push_beta(s.gb, pull_alpha(s.bg, x), Haar(s.gb.sub(), m)), id, w, c.range, c.cap);
        });
    };
    auto f2 = [&](Hyp h, const std::string& id) {  // beta^*(gamma_* G mu) = beta_gamma_* gamma_beta^*(G mu)
        repeat(c, h, [&](const Points& p, const std::string& w) {
            const Square s = sq(p);
            const Rational m = rand_scale(rng, f->q());
            const Dist1 g = rand_Dp(rng, s.g.sub());
            cmp_dist(rec, pull_beta(s.b, push_alpha(s.g, g), Haar(s.b.sub(), m)),
                     push_alpha(s.bg, pull_beta(s.gb, g, Haar(s.gb.sub(), m))), id, w, c.range, c.cap);
        });
    };
    auto f3 = [&](Hyp h, bool on_d, const std::string& id) {  // gamma_beta^* gamma^* = beta_gamma^* beta^*
        repeat(c, h, [&](const Points& p, const std::string& w) {
            const Square s = sq(p);
            const Fn1 x = on_d ? rand_D(rng, s.b.quot()) : rand_E(rng, s.b.quot());
            cmp_fn(rec, pull_beta(s.gb, pull_alpha(s.g, x)), pull_alpha(s.bg, pull_beta(s.b, x)), id, w, c.range, c.cap);
        });
    };
    auto f4 = [&](Hyp h, bool general, const std::string& id) {  // beta_* beta_gamma_* = gamma_* gamma_beta_*
        repeat(c, h, [&](const Points& p, const std::string& w) {
            const Square s = sq(p);
            const Dist1 g = general ? rand_Dp(rng, s.bg.sub()) : rand_Ep(rng, s.bg.sub());
            cmp_dist(rec, push_beta(s.b, push_alpha(s.bg, g)), push_alpha(s.g, push_beta(s.gb, g)), id, w, c.range, c.cap);
        });
    };
    auto f7 = [&](Hyp h, bool on_e, const std::string& id) {  // beta_*(beta_gamma_* f mu) = gamma_* gamma_beta_*(f mu)
        repeat(c, h, [&](const Points& p, const std::string& w) {
            const Square s = sq(p);
            const Rational m = rand_scale(rng, f->q());
            const Fn1 x = on_e ? rand_E(rng, s.bg.sub()) : rand_D(rng, s.bg.sub());
            cmp_fn(rec, push_beta(s.b, push_alpha(s.bg, x), Haar(s.b.sub(), m)),
                   push_alpha(s.g, push_beta(s.gb, x, Haar(s.gb.sub(), m))), id, w, c.range, c.cap);
        });
    };
    auto f8 = [&](Hyp h, bool compact_support, const std::string& id) {  // gamma_beta^*(gamma^* G mu) = beta_gamma^* beta^*(G mu)
        repeat(c, h, [&](const Points& p, const std::string& w) {
            const Square s = sq(p);
            const Rational m = rand_scale(rng, f->q());
            const Dist1 g = compact_support ? rand_Ep(rng, s.b.quot()) : rand_Dp(rng, s.b.quot());
            cmp_dist(rec, pull_beta(s.gb, pull_alpha(s.g, g), Haar(s.gb.sub(), m)),
                     pull_alpha(s.bg, pull_beta(s.b, g, Haar(s.b.sub(), m))), id, w, c.range, c.cap);
        });
    };
    auto f9 = [&](const std::string& id) {  // beta^* gamma_* f = beta_gamma_* gamma_beta^* f
        repeat(c, both, [&](const Points& p, const std::string& w) {
            const Square s = sq(p);
            const Fn1 x = rand_D(rng, s.g.sub());
            cmp_fn(rec, pull_beta(s.b, push_alpha(s.g, x)), push_alpha(s.bg, pull_beta(s.gb, x)), id, w, c.range, c.cap);
        });
    };
    auto f10 = [&](const std::string& id) {  // gamma^* beta_* G = gamma_beta_* beta_gamma^* G
        repeat(c, both, [&](const Points& p, const std::string& w) {
            const Square s = sq(p);
            const Dist1 g = rand_Dp(rng, s.b.mid());
            cmp_dist(rec, pull_alpha(s.g, push_beta(s.b, g)), push_beta(s.gb, pull_alpha(s.bg, g)), id, w, c.range, c.cap);
        });
    };
    f1(any, false, "gamma^* beta_*(f mu) = (gamma_beta)_*(beta_gamma^* f mu) on D");
    f2(any, "beta^*(gamma_* G mu) = (beta_gamma)_* gamma_beta^*(G mu) on D'");
    f3(any, false, "gamma_beta^* gamma^* f = beta_gamma^* beta^* f on E");
    f4(any, false, "beta_*(beta_gamma)_* G = gamma_*(gamma_beta)_* G on E~'");
    f3(e1c, true, "gamma_beta^* gamma^* f = beta_gamma^* beta^* f on D, E1 compact");
    f4(e1c, true, "beta_*(beta_gamma)_* G = gamma_*(gamma_beta)_* G on D', E1 compact");
    f7(bd, false, "beta_*((beta_gamma)_* f mu) = gamma_*(gamma_beta)_*(f mu) on D, B discrete");
    f8(bd, false, "gamma_beta^*(gamma^* G mu) = beta_gamma^* beta^*(G mu) on D', B discrete");
    f9("beta^* gamma_* f = (beta_gamma)_* gamma_beta^* f on D");
    f10("gamma^* beta_* G = (gamma_beta)_* beta_gamma^* G on D'");
    f7(both, true, "beta_*((beta_gamma)_* f mu) = gamma_*(gamma_beta)_*(f mu) on E");
    f8(both, true, "gamma_beta^*(gamma^* G mu) = beta_gamma^* beta^*(G mu) on E~'");
}

// ---------------------------------------------------------------- Fourier and images

void suite_fourier_image(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    Ctx c = ctx_of(f, args, rng, rec, 100);
    auto any = [](const Points&) { return true; };
    auto T_of = [&](const Points& p) { return triple(f, p, 0, 1, 3, "123"); };
    auto scales = [&] { return std::pair{rand_scale(rng, f->q()), rand_scale(rng, f->q())}; };
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p), D = T.dual();
        const auto [s1, s3] = scales();
        const Fn1 x = rand_D(rng, T.mid());
        cmp_fn(rec, fourier1(push_beta(T, x, Haar(T.sub(), s1)), Haar(T.quot(), s3), D.sub()),
               pull_alpha(D, fourier1(x, Haar(T.mid(), s1 * s3), D.mid())), "F(beta_*(f mu1)) = beta^^* F(f)", w, c.range, c.cap);
    });
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p), D = T.dual();
        const auto [s1, s3] = scales();
        const Fn1 x = rand_D(rng, T.mid());
        cmp_fn(rec, fourier1(pull_alpha(T, x), Haar(T.sub(), s1), D.quot()),
               push_beta(D, fourier1(x, Haar(T.mid(), s1 * s3), D.mid()), Haar(D.sub(), 1 / s3)),
               "F(alpha^* f) = alpha^_*(F(f) mu3^)", w, c.range, c.cap);
    });
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p), D = T.dual();
        const auto [s1, s3] = scales();
        const Dist1 g = rand_Dp(rng, T.quot());
        cmp_dist(rec, fourier1_dist(pull_beta(T, g, Haar(T.sub(), s1)), Haar(T.mid(), s1 * s3), D.mid()),
                 push_alpha(D, fourier1_dist(g, Haar(T.quot(), s3), D.sub())), "F(beta^*(G mu1)) = beta^_* F(G)", w, c.range, c.cap);
    });
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p), D = T.dual();
        const auto [s1, s3] = scales();
        const Dist1 g = rand_Dp(rng, T.sub());
        cmp_dist(rec, fourier1_dist(push_alpha(T, g), Haar(T.mid(), s1 * s3), D.mid()),
                 pull_beta(D, fourier1_dist(g, Haar(T.sub(), s1), D.quot()), Haar(D.sub(), 1 / s3)),
                 "F(alpha_* G) = alpha^^*(F(G) mu3^)", w, c.range, c.cap);
    });
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p), D = T.dual();
        const Fn1 x = rand_E(rng, T.quot());
        cmp_dist(rec, fourier1_e(pull_beta(T, x), D.mid()), push_alpha(D, fourier1_e(x, D.sub())), "F(beta^* f) = beta^_* F(f) on E",
                 w, c.range, c.cap);
    });
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p), D = T.dual();
        const Dist1 g = rand_Ep(rng, T.sub());
        cmp_fn(rec, fourier1_e_dist(push_alpha(T, g), D.mid()), pull_beta(D, fourier1_e_dist(g, D.quot())),
               "F(alpha_* G) = alpha^^* F(G) on E~'", w, c.range, c.cap);
    });
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p), D = T.dual();
        const Fn1 x = rand_E(rng, T.mid());
        cmp_dist(rec, fourier1_e(pull_alpha(T, x), D.quot()), push_beta(D, fourier1_e(x, D.mid())),
                 "F(alpha^* f) = alpha^_* F(f) on E", w, c.range, c.cap);
    });
    repeat(c, any, [&](const Points& p, const std::string& w) {
        const TripleC1 T = T_of(p), D = T.dual();
        const Dist1 g = rand_Ep(rng, T.mid());
        cmp_fn(rec, fourier1_e_dist(push_beta(T, g), D.sub()), pull_alpha(D, fourier1_e_dist(g, D.mid())),
               "F(beta_* G) = beta^^* F(G) on E~'", w, c.range, c.cap);
    });
}

}  // namespace fh::harness::detail
