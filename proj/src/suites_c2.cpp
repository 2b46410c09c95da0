/**
 * @file suites_c2.cpp
 * @brief Two-dimensional suites: virtual measures, both Poisson formulas,
 *        the central extension and its representations, and the image
 *        calculus on random piece layouts.
 */
#include "suites.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace fh::harness::detail {

namespace {

std::string show(long x) { return x >= kInf / 2 ? "inf" : (x <= -kInf / 2 ? "-inf" : std::to_string(x)); }

Rational rand_unit(Lcg& rng) {
    static const long nums[] = {1, 1, 2, 3, -1};
    return frac(nums[rng.uniform(0, 4)], rng.uniform(1, 3));
}

FqElem rand_nonzero(Lcg& rng, const FieldPtr& f) { return FqElem(f, static_cast<int>(rng.uniform(1, f->q() - 1))); }

AutHat rand_aut(Lcg& rng, const C2Ptr& m, long o) {
    const AutElem g(rng.uniform(-2, 2), rng.uniform(-2, 2), rand_nonzero(rng, m->field_ptr()));
    return {m, o, g, rand_unit(rng), rng.uniform(-2, 2)};
}

struct Box {
    long l, i, lo, hi;
};

/// A small bi-window on m with at most `cap` points; the outer window starts near `at`.
Box rand_box(Lcg& rng, const C2Model& m, std::size_t cap, long at = 0) {
    Box b{at + rng.uniform(-1, 0), 0, rng.uniform(-1, 0), 0};
    b.i = b.l + rng.uniform(0, 1);
    b.hi = b.lo + rng.uniform(0, 2);
    auto too_big = [&] {
        std::size_t pts = 1;
        for (long k = m.biwindow_dim(b.l, b.i, b.lo, b.hi); k > 0; --k)
            if ((pts *= static_cast<std::size_t>(m.q())) > cap) return true;
        return false;
    };
    while (too_big() && b.hi > b.lo) --b.hi;
    while (too_big() && b.i > b.l) --b.i;
    return b;
}

D2Elem rand_D2(Lcg& rng, const C2Ptr& m, long o, std::size_t cap) {
    const Box b = rand_box(rng, *m, cap);
    return D2Elem::from_biwindow(m, o, b.l, b.i, b.lo, b.hi, rand_table(rng, m->inner(b.l, b.i)->window_space(b.lo, b.hi)));
}

E2Fn rand_E2(Lcg& rng, const C2Ptr& m, std::size_t cap, long at = 0) {
    const Box b = rand_box(rng, *m, cap, at);
    return E2Fn::cylinder(m, b.l, b.i, b.lo, b.hi, rand_table(rng, m->inner(b.l, b.i)->window_space(b.lo, b.hi)));
}

// Distributions are only available below their window, so `at` keeps the
// acted-on element inside the compared range.
D2Dist rand_D2p(Lcg& rng, const C2Ptr& m, long o, std::size_t cap, long at = 0) {
    const Box b = rand_box(rng, *m, cap, at);
    const ModelPtr w = m->inner(b.l, b.i);
    Dist1 g = Dist1::from_window(w, b.lo, b.hi, rand_table(rng, w->window_space(b.lo, b.hi)));
    if (rng.coin()) {
        const Fn1 x = Fn1::from_window(w, b.lo, b.hi, rand_table(rng, w->window_space(b.lo, b.hi)));
        g = g + Dist1::density(x, Haar(w, rand_scale(rng, m->q())));
    }
    return D2Dist::from_window(m, o, b.l, b.i, g);
}

std::string win2(long i, long j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// ---------------------------------------------------------------- random piece layouts

struct Layout {
    std::vector<std::pair<long, std::array<long, 4>>> pieces;
    long o = 0;
};

std::string describe(const Layout& L) {
    std::ostringstream os;
    os << "o=" << L.o << " pieces";
    for (const auto& [from, p] : L.pieces)
        os << " " << show(from) << ":[" << show(p[0]) << "," << show(p[1]) << "," << show(p[2]) << "," << show(p[3]) << "]";
    return os.str();
}

Layout rand_layout(Lcg& rng) {
    Layout L;
    L.o = rng.uniform(-1, 1);
    const int n = static_cast<int>(rng.uniform(1, 2));
    for (int k = 0; k < n; ++k) {
        std::array<long, 4> p{};
        if (rng.uniform(0, 3) == 0) {
            p.fill(0);  // an empty piece
        } else {
            for (auto& x : p) {
                const long r = rng.uniform(0, 6);
                x = r == 0 ? -kInf : (r == 1 ? kInf : rng.uniform(-1, 1));
            }
            std::sort(p.begin(), p.end());
        }
        L.pieces.emplace_back(k == 0 ? -kInf : rng.uniform(-1, 1), p);
    }
    return L;
}

C2Ptr part(const FieldPtr& f, const Layout& L, int i, int j, const std::string& name) {
    std::vector<Piece> ps;
    for (const auto& [from, p] : L.pieces) ps.push_back({from, p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]});
    return make_model(C2Model(f, ps, 0, 0, name));
}

TripleC2 triple(const FieldPtr& f, const Layout& L, int i, int j, int k, const char* names) {
    const std::string n(names);
    return {part(f, L, i, j, n.substr(0, 1)), part(f, L, i, k, n.substr(1, 1)), part(f, L, j, k, n.substr(2, 1))};
}

struct Ctx {
    FieldPtr f;
    Lcg& rng;
    Recorder& rec;
    long range;
    std::size_t cap;
    long cases;
};

Ctx ctx_of(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec, long cases_default) {
    return {std::move(f), rng, rec, args.integer("range", 1), static_cast<std::size_t>(args.integer("cap", 16)),
            args.integer("cases", cases_default)};
}

using Hyp = std::function<bool(const Layout&)>;

void repeat(Ctx& c, const Hyp& hyp, const std::function<void(const Layout&, const std::string&)>& body) {
    for (long k = 0; k < c.cases; ++k) {
        Layout L;
        for (int tries = 0;; ++tries) {
            L = rand_layout(c.rng);
            bool live = false;
            for (const auto& pc : L.pieces) live = live || pc.second[0] < pc.second[3];
            if (live && hyp(L)) break;
            if (tries > 5000) throw DomainError("no layout satisfies the hypotheses");
        }
        const std::string where = describe(L);
        try {
            body(L, where);
        } catch (const DomainError& e) {
            c.rec.check(false, "evaluation", where, "", e.what());
        }
    }
}

}  // namespace

// ---------------------------------------------------------------- virtual measures

void suite_virtual_measure(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    const long r = args.integer("range", 4);
    using K = VirtualMeasure::Kind;
    const std::vector<C2Ptr> models = {make_model(C2Model::k2(f)), make_model(C2Model::outer_lattice(f, 0)),
                                       make_model(C2Model::outer_quotient(f, 1)), make_model(C2Model::inner_lattice(f, 0)),
                                       make_model(C2Model::inner_lattice(f, -1)), make_model(C2Model::inner_quotient(f, 0)),
                                       make_model(C2Model::inner_quotient(f, 2))};
    for (const auto& m : models) {
        const C2Ptr md = make_model(m->dual());
        for (long i = -r; i <= r; ++i)
            for (long j = -r; j <= r; ++j) {
                const std::string w = m->name() + " " + win2(i, j);
                const VirtualMeasure a(m, i, j, rand_unit(rng), rng.uniform(-3, 3));
                rec.check(a.compose(a.inverse()) == VirtualMeasure::identity(m, i), "mu mu^{-1} = 1", w);
                for (long k = -r; k <= r; k += 2) {
                    const VirtualMeasure b(m, j, k, rand_unit(rng), rng.uniform(-3, 3));
                    const VirtualMeasure c(m, k, i, rand_unit(rng), rng.uniform(-3, 3));
                    rec.check(a.compose(b).compose(c) == a.compose(b.compose(c)), "(mu nu) rho = mu (nu rho)", w);
                    if (m->cfC2())
                        rec.check(VirtualMeasure::canonical(m, i, j, K::One).compose(VirtualMeasure::canonical(m, j, k, K::One)) ==
                                      VirtualMeasure::canonical(m, i, k, K::One),
                                  "1_{ij} 1_{jk} = 1_{ik}", w + " k=" + std::to_string(k));
                    if (m->dfC2())
                        rec.check(VirtualMeasure::canonical(m, i, j, K::Delta)
                                          .compose(VirtualMeasure::canonical(m, j, k, K::Delta)) ==
                                      VirtualMeasure::canonical(m, i, k, K::Delta),
                                  "delta_{ij} delta_{jk} = delta_{ik}", w + " k=" + std::to_string(k));
                }
                if (m->cfC2()) {
                    const VirtualMeasure one = VirtualMeasure::canonical(m, i, j, K::One);
                    rec.check(one.dual(md) == VirtualMeasure::canonical(md, -i, -j, K::Delta), "1_{ij} on E = delta_{-i,-j} on E^",
                              w);
                    if (i < j) {
                        const ModelPtr q = m->inner(i, j);
                        const Rational v = Haar(q, one.scalar()).value(*q->top());
                        rec.check(v == 1, "1_{ij} gives F(j)/F(i) total mass 1", w, "1", v.get_str());
                    }
                }
                if (m->dfC2() && i < j) {
                    const ModelPtr q = m->inner(i, j);
                    const Rational v = Haar(q, VirtualMeasure::canonical(m, i, j, K::Delta).scalar()).value(*q->bottom());
                    rec.check(v == 1, "delta_{ij} gives the origin of F(j)/F(i) mass 1", w, "1", v.get_str());
                }
            }
    }
}

// ---------------------------------------------------------------- Poisson formulas

namespace {

std::vector<AutElem> monomials(const FieldPtr& f, const SuiteArgs& args) {
    std::vector<AutElem> gs{AutElem::identity(f)};
    if (args.word("corollary", "yes") == "no") return gs;
    for (long a : {-1, 1}) gs.emplace_back(a, 0, FqElem(f, 1));
    for (long b : {-1, 2}) gs.emplace_back(0, b, FqElem(f, f->q() - 1));
    gs.emplace_back(1, -1, FqElem(f, 1));
    return gs;
}

std::string aut_name(const AutElem& g) {
    return "g=t^" + std::to_string(g.a()) + "u^" + std::to_string(g.b()) + "*" + std::to_string(g.c().index());
}

std::vector<std::pair<std::string, TripleC2>> config_triples(const FieldPtr& f, const SuiteArgs& args) {
    std::vector<std::pair<std::string, TripleC2>> out;
    std::istringstream is(args.word("triples", ""));
    std::string name;
    while (std::getline(is, name, ',')) {
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        const TripleC2& t = args.config().triples2.at(name);
        auto rebuild = [&](const C2Ptr& m) {
            return make_model(C2Model(f, m->pieces(), m->outer_shift(), m->inner_shift(), m->name()));
        };
        out.emplace_back(name, TripleC2(rebuild(t.sub()), rebuild(t.mid()), rebuild(t.quot())));
    }
    return out;
}

}  // namespace

void suite_poisson2_I(FieldPtr f, const SuiteArgs& args, Lcg&, Recorder& rec) {
    const long range = args.integer("range", 2);
    const std::size_t cap = static_cast<std::size_t>(args.integer("cap", 256));
    const bool wrong = args.word("fault", "none") == "measure";
    std::vector<std::pair<std::string, TripleC2>> triples;
    if (args.has("triples")) {
        triples = config_triples(f, args);
    } else {
        const C2Ptr k = make_model(C2Model::k2(f));
        for (long m : args.integers("lattices", {0, 1}))
            triples.emplace_back("t^" + std::to_string(m) + "K[[t]] in K2", TripleC2::split(k, {{-kInf, kInf}, {-m, -kInf}}));
    }
    const std::vector<Rational> scales = args.scalars("scales", {1, Rational(f->q()), Rational(1, f->q())});
    for (const auto& [name, T0] : triples)
        for (const auto& g : monomials(f, args)) {
            const TripleC2 T = T0.transformed(g), D = T.dual();
            for (long o : args.integers("basepoints", {0, 1}))
                for (std::size_t s = 0; s < scales.size(); ++s) {
                    const Rational mu = scales[s], nu = scales[(s + 1) % scales.size()];
                    const D2Dist lhs = fourier2(char_dist(T, o, mu, nu), D.mid());
                    const D2Dist rhs = char_dist(D, -o, wrong ? nu * f->q() : nu, mu);
                    std::ostringstream w;
                    w << name << " " << aut_name(g) << " o=" << o << " mu=" << mu.get_str() << " nu=" << nu.get_str();
                    rec.merge(compare2(lhs, rhs, range, cap), "F(delta_{E1,mu x nu}) = delta_{E3^,nu x mu}", w.str());
                }
        }
}

void suite_poisson2_II(FieldPtr f, const SuiteArgs& args, Lcg&, Recorder& rec) {
    const long range = args.integer("range", 2);
    const std::size_t cap = static_cast<std::size_t>(args.integer("cap", 256));
    std::vector<std::pair<std::string, TripleC2>> triples;
    if (args.has("triples")) {
        triples = config_triples(f, args);
    } else {
        const C2Ptr k = make_model(C2Model::k2(f));
        for (long m : args.integers("lattices", {0, 1}))
            triples.emplace_back("u^" + std::to_string(m) + "O((t)) in K2", TripleC2::split(k, {{-kInf, -m}}));
    }
    for (const auto& [name, T0] : triples)
        for (const auto& g : monomials(f, args)) {
            const TripleC2 T = T0.transformed(g), D = T.dual();
            for (long o : args.integers("basepoints", {0, 1})) {
                const D2Elem lhs = fourier2(char_fn(T, o), D.mid());
                rec.merge(compare2(lhs, char_fn(D, -o), range, cap), "F(delta_{E1}) = delta_{E3^}",
                          name + " " + aut_name(g) + " o=" + std::to_string(o));
            }
        }
}

// ---------------------------------------------------------------- central extension and representations

void suite_central_ext(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    const long cases = args.integer("cases", 100);
    const C2Ptr k = make_model(C2Model::k2(f));
    const C2Ptr kd = make_model(k->dual());
    const int q = f->q();
    {
        const AutHat t(k, 0, AutElem(1, 0, FqElem(f, 1))), u(k, 0, AutElem(0, 1, FqElem(f, 1)));
        const AutHat c = t * u * t.inverse() * u.inverse();
        rec.check(c.g() == AutElem::identity(f), "[t, u] lies over the identity", "o=0");
        rec.check(c.lambda() == q, "[t, u] = q", "o=0", std::to_string(q), c.lambda().get_str());
    }
    for (long n = 0; n < cases; ++n) {
        const long o = rng.uniform(-2, 2);
        const AutHat x = rand_aut(rng, k, o), y = rand_aut(rng, k, o), z = rand_aut(rng, k, o);
        const std::string w = "case " + std::to_string(n) + " o=" + std::to_string(o);
        rec.check((x * y) * z == x * (y * z), "(xy)z = x(yz)", w);
        rec.check(x * x.inverse() == AutHat::identity(k, o), "x x^{-1} = 1", w);
        rec.check(x.inverse() * x == AutHat::identity(k, o), "x^{-1} x = 1", w);
        rec.check((x * y).g() == x.g() * y.g(), "projection to the automorphism group is a homomorphism", w);
        const AutHat c = x * y * x.inverse() * y.inverse();
        const Rational expect = qpow(q, x.g().a() * y.g().b() - x.g().b() * y.g().a());
        rec.check(c.g() == AutElem::identity(f) && c.lambda() == expect, "[x, y] = q^{a b' - b a'}", w, expect.get_str(),
                  c.lambda().get_str());
        rec.check((x * y).dual(kd) == x.dual(kd) * y.dual(kd), "dual map is a homomorphism", w);
    }
}

void suite_representation(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    const long cases = args.integer("cases", 20), range = args.integer("range", 1);
    const std::size_t cap = static_cast<std::size_t>(args.integer("cap", 16));
    const C2Ptr k = make_model(C2Model::k2(f));
    for (long n = 0; n < cases; ++n) {
        const long o = rng.uniform(-1, 1);
        const AutHat g = rand_aut(rng, k, o), h = rand_aut(rng, k, o);
        const long s = g.g().a() + h.g().a();
        const D2Elem x = rand_D2(rng, k, o, cap);
        const D2Dist G = rand_D2p(rng, k, o, cap, s), G1 = rand_D2p(rng, k, o, cap, g.g().a());
        const E2Fn e = rand_E2(rng, k, cap, g.g().a());
        const std::string w = "case " + std::to_string(n) + " o=" + std::to_string(o);
        rec.merge(compare2(act(g, act(h, x)), act(g * h, x), range, cap), "R_g R_h = R_{gh}", w);
        rec.merge(compare2(act(g, act(h, G)), act(g * h, G), range, cap), "R'_g R'_h = R'_{gh}", w);
        rec.merge(compare2(act(g, e * x), act(g.g(), e) * act(g, x), range, cap), "R_g(f x) = r_g(f) R_g(x)", w);
        rec.merge(compare2(act(g, e * G1), act(g.g(), e) * act(g, G1), range, cap), "R'_g(f G) = r_g(f) R'_g(G)", w);
        const CycNum l = pair(act(g, x), act(g, G)), r = pair(x, G);
        rec.check(l == r, "<R'_g G, R_g x> = <G, x>", w, digest(r), digest(l));
    }
}

void suite_fourier_intertwine(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    const long cases = args.integer("cases", 20), range = args.integer("range", 1);
    const std::size_t cap = static_cast<std::size_t>(args.integer("cap", 16));
    const C2Ptr k = make_model(C2Model::k2(f));
    const C2Ptr kd = make_model(k->dual());
    // E3 = u^0 O((t)) on slices k_o >= 0 and nothing below: dC2 and dfC2, with reference scalar 1.
    const TripleC2 R = TripleC2::split(k, {{-kInf, kInf}, {0, 0}});
    for (long n = 0; n < cases; ++n) {
        const long o = rng.uniform(-1, 1);
        const AutHat g = rand_aut(rng, k, o);
        const D2Elem x = rand_D2(rng, k, o, cap);
        const D2Dist G = rand_D2p(rng, k, o, cap, g.g().a()), G0 = rand_D2p(rng, k, o, cap);
        const D2Dist H = rand_D2p(rng, kd, -o, cap);
        const E2Fn e = rand_E2(rng, k, cap, g.g().a());
        const std::string w = "case " + std::to_string(n) + " o=" + std::to_string(o);
        rec.merge(compare2(fourier2(act(g, x), kd), act(g.dual(kd), fourier2(x, kd)), range, cap), "F R_g = R_{g^} F on D", w);
        rec.merge(compare2(fourier2(act(g, G), kd), act(g.dual(kd), fourier2(G, kd)), range, cap), "F R'_g = R'_{g^} F on D'",
                  w);
        rec.merge(compare2(fourier2(act(g.g(), e), kd), act(g.g().dual_inverse(), fourier2(e, kd)), range, cap),
                  "F r_g = r'_{g^} F on E", w);
        rec.merge(compare2(fourier2(fourier2(x, kd), k), x.checked(), range, cap), "F F x = check x", w);
        rec.merge(compare2(fourier2(fourier2(G0, kd), k), G0.checked(), range, cap), "F F G = check G", w);
        const CycNum l = pair(fourier2(x, kd), H), r = pair(x, fourier2(H, k));
        rec.check(l == r, "<F x, H> = <x, F H>", w, digest(r), digest(l));
        const VirtualMeasure v(k, o, o + rng.uniform(-1, 1), rand_unit(rng), rng.uniform(-2, 2));
        rec.merge(compare2(fourier2(x.rebased(v), kd), fourier2(x, kd).rebased(v.dual(kd)), range, cap),
                  "F(x tensor mu) = F(x) tensor mu^", w);
        const long da = rng.uniform(-1, 1), db = rng.uniform(-1, 1);
        const D2Elem xr = x.reindexed(da, db);
        const C2Ptr rd = make_model(xr.model()->dual());
        rec.merge(compare2(fourier2(xr, rd), fourier2(x, kd).reindexed(-da, -db), range, cap), "F commutes with reindexing",
                  w + " da=" + std::to_string(da) + " db=" + std::to_string(db));
        const Rational nu = rand_scale(rng, f->q());
        const D2Elem s = rand_D2(rng, R.sub(), o, cap);
        rec.merge(compare2(pull_alpha(R, push_alpha(R, s), nu), s.scaled(nu), range, cap), "alpha^*(alpha_* x) = nu x", w);
    }
}

// ---------------------------------------------------------------- images on random layouts

void suite_base_change2(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    Ctx c = ctx_of(f, args, rng, rec, 8);
    auto pc = [&](const Layout& L, int i, int j) { return part(f, L, i, j, ""); };
    auto cc = [&](const Layout& L, int i, int j) { return pc(L, i, j)->cC2(); };
    auto cf = [&](const Layout& L, int i, int j) { return pc(L, i, j)->cfC2(); };
    auto dc = [&](const Layout& L, int i, int j) { return pc(L, i, j)->dC2(); };
    auto df = [&](const Layout& L, int i, int j) { return pc(L, i, j)->dfC2(); };
    auto sc = [&] { return rand_scale(rng, f->q()); };
    auto cmp = [&](const auto& a, const auto& b, const std::string& id, const std::string& w) {
        rec.merge(compare2(a, b, c.range, c.cap), id, w);
    };

    // Epimorphisms H -> E2 -> E3: L = [x0,x1), E1 = [x1,x2), H' = [x0,x2).
    struct Epi {
        TripleC2 b1, b, bb;
    };
    auto epi = [&](const Layout& L) {
        return Epi{triple(f, L, 0, 1, 3, "LHE"), triple(f, L, 1, 2, 3, "123"), triple(f, L, 0, 2, 3, "PH3")};
    };
    repeat(c, [&](const Layout& L) { return cc(L, 0, 1) && cc(L, 1, 2); }, [&](const Layout& L, const std::string& w) {
        const Epi e = epi(L);
        const Rational n = sc(), m = sc();
        const D2Elem x = rand_D2(rng, e.bb.mid(), L.o, c.cap);
        cmp(push_beta(e.bb, x, n * m), push_beta(e.b, push_beta(e.b1, x, n), m), "(beta beta')_* = beta_* beta'_* on D", w);
        const D2Dist h = rand_D2p(rng, e.b.quot(), L.o, c.cap);
        cmp(pull_beta(e.bb, h, n * m), pull_beta(e.b1, pull_beta(e.b, h, m), n), "(beta beta')^* = beta'^* beta^* on D'", w);
    });
    repeat(c, [&](const Layout& L) { return cf(L, 0, 1) && cf(L, 1, 2); }, [&](const Layout& L, const std::string& w) {
        const Epi e = epi(L);
        const D2Elem y = rand_D2(rng, e.b.quot(), L.o, c.cap);
        cmp(pull_beta(e.bb, y), pull_beta(e.b1, pull_beta(e.b, y)), "(beta beta')^* = beta'^* beta^* on D", w);
        const D2Dist g = rand_D2p(rng, e.bb.mid(), L.o, c.cap);
        cmp(push_beta(e.bb, g), push_beta(e.b, push_beta(e.b1, g)), "(beta beta')_* = beta_* beta'_* on D'", w);
    });

    // Monomorphisms E1 -> E2 -> H': E1 = [x0,x1), E2 = [x0,x2), H' = [x0,x3).
    struct Mono {
        TripleC2 a, a1, aa;
    };
    auto mono = [&](const Layout& L) {
        return Mono{triple(f, L, 0, 1, 2, "123"), triple(f, L, 0, 2, 3, "2HL"), triple(f, L, 0, 1, 3, "1HQ")};
    };
    repeat(c, [&](const Layout& L) { return dc(L, 1, 2) && dc(L, 2, 3); }, [&](const Layout& L, const std::string& w) {
        const Mono e = mono(L);
        const Rational n = sc(), m = sc();
        const D2Elem x = rand_D2(rng, e.aa.mid(), L.o, c.cap);
        cmp(pull_alpha(e.aa, x, n * m), pull_alpha(e.a, pull_alpha(e.a1, x, m), n), "(alpha' alpha)^* = alpha^* alpha'^* on D", w);
        const D2Dist g = rand_D2p(rng, e.a.sub(), L.o, c.cap);
        cmp(push_alpha(e.aa, g, n * m), push_alpha(e.a1, push_alpha(e.a, g, n), m), "(alpha' alpha)_* = alpha'_* alpha_* on D'",
            w);
    });
    repeat(c, [&](const Layout& L) { return df(L, 1, 2) && df(L, 2, 3); }, [&](const Layout& L, const std::string& w) {
        const Mono e = mono(L);
        const D2Elem x = rand_D2(rng, e.a.sub(), L.o, c.cap);
        cmp(push_alpha(e.aa, x), push_alpha(e.a1, push_alpha(e.a, x)), "(alpha' alpha)_* = alpha'_* alpha_* on D", w);
        const D2Dist g = rand_D2p(rng, e.aa.mid(), L.o, c.cap);
        cmp(pull_alpha(e.aa, g), pull_alpha(e.a, pull_alpha(e.a1, g)), "(alpha' alpha)^* = alpha^* alpha'^* on D'", w);
    });

    // Cartesian square: E2 = [x0,x3), E1 = [x0,x1), E3 = [x1,x3), D = [x1,x2), B = [x2,x3), X' = [x0,x2).
    struct Square {
        TripleC2 b, g, bg, gb;
    };
    auto sq = [&](const Layout& L) {
        return Square{triple(f, L, 0, 1, 3, "123"), triple(f, L, 1, 2, 3, "D3B"), triple(f, L, 0, 2, 3, "X2B"),
                      triple(f, L, 0, 1, 2, "1XD")};
    };
    repeat(c, [&](const Layout& L) { return cc(L, 0, 1) && dc(L, 2, 3); }, [&](const Layout& L, const std::string& w) {
        const Square s = sq(L);
        const Rational m = sc(), n = sc();
        const D2Elem x = rand_D2(rng, s.b.mid(), L.o, c.cap);
        cmp(pull_alpha(s.g, push_beta(s.b, x, m), n), push_beta(s.gb, pull_alpha(s.bg, x, n), m),
            "gamma^* beta_* = (gamma_beta)_* beta_gamma^* on D", w);
        const D2Dist G = rand_D2p(rng, s.g.sub(), L.o, c.cap);
        cmp(pull_beta(s.b, push_alpha(s.g, G, n), m), push_alpha(s.bg, pull_beta(s.gb, G, m), n),
            "beta^* gamma_* = (beta_gamma)_* gamma_beta^* on D'", w);
    });
    repeat(c, [&](const Layout& L) { return cf(L, 0, 1) && dc(L, 2, 3); }, [&](const Layout& L, const std::string& w) {
        const Square s = sq(L);
        const Rational n = sc();
        const D2Elem y = rand_D2(rng, s.b.quot(), L.o, c.cap);
        cmp(pull_beta(s.gb, pull_alpha(s.g, y, n)), pull_alpha(s.bg, pull_beta(s.b, y), n),
            "gamma_beta^* gamma^* = beta_gamma^* beta^* on D", w);
        const D2Dist G = rand_D2p(rng, s.bg.sub(), L.o, c.cap);
        cmp(push_beta(s.b, push_alpha(s.bg, G, n)), push_alpha(s.g, push_beta(s.gb, G), n),
            "beta_* (beta_gamma)_* = gamma_* (gamma_beta)_* on D'", w);
    });
    repeat(c, [&](const Layout& L) { return cc(L, 0, 1) && df(L, 2, 3); }, [&](const Layout& L, const std::string& w) {
        const Square s = sq(L);
        const Rational m = sc();
        const D2Elem x = rand_D2(rng, s.bg.sub(), L.o, c.cap);
        cmp(push_beta(s.b, push_alpha(s.bg, x), m), push_alpha(s.g, push_beta(s.gb, x, m)),
            "beta_* (beta_gamma)_* = gamma_* (gamma_beta)_* on D", w);
        const D2Dist G = rand_D2p(rng, s.b.quot(), L.o, c.cap);
        cmp(pull_beta(s.gb, pull_alpha(s.g, G), m), pull_alpha(s.bg, pull_beta(s.b, G, m)),
            "gamma_beta^* gamma^* = beta_gamma^* beta^* on D'", w);
    });
    repeat(c, [&](const Layout& L) { return cf(L, 0, 1) && df(L, 2, 3); }, [&](const Layout& L, const std::string& w) {
        const Square s = sq(L);
        const D2Elem x = rand_D2(rng, s.g.sub(), L.o, c.cap);
        cmp(pull_beta(s.b, push_alpha(s.g, x)), push_alpha(s.bg, pull_beta(s.gb, x)),
            "beta^* gamma_* = (beta_gamma)_* gamma_beta^* on D", w);
        const D2Dist G = rand_D2p(rng, s.b.mid(), L.o, c.cap);
        cmp(pull_alpha(s.g, push_beta(s.b, G)), push_beta(s.gb, pull_alpha(s.bg, G)),
            "gamma^* beta_* = (gamma_beta)_* beta_gamma^* on D'", w);
    });
}

void suite_fourier_image2(FieldPtr f, const SuiteArgs& args, Lcg& rng, Recorder& rec) {
    Ctx c = ctx_of(f, args, rng, rec, 8);
    auto pc = [&](const Layout& L, int i, int j) { return part(f, L, i, j, ""); };
    auto T_of = [&](const Layout& L) { return triple(f, L, 0, 1, 3, "123"); };
    auto cmp = [&](const auto& a, const auto& b, const std::string& id, const std::string& w) {
        rec.merge(compare2(a, b, c.range, c.cap), id, w);
    };
    repeat(c, [&](const Layout& L) { return pc(L, 0, 1)->cC2(); }, [&](const Layout& L, const std::string& w) {
        const TripleC2 T = T_of(L), D = T.dual();
        const Rational m = rand_scale(rng, f->q());
        const D2Elem x = rand_D2(rng, T.mid(), L.o, c.cap);
        cmp(fourier2(push_beta(T, x, m), D.sub()), pull_alpha(D, fourier2(x, D.mid()), m), "F beta_* = beta^^* F on D", w);
        const D2Dist h = rand_D2p(rng, T.quot(), L.o, c.cap);
        cmp(fourier2(pull_beta(T, h, m), D.mid()), push_alpha(D, fourier2(h, D.sub()), m), "F beta^* = beta^_* F on D'", w);
    });
    repeat(c, [&](const Layout& L) { return pc(L, 1, 3)->dC2(); }, [&](const Layout& L, const std::string& w) {
        const TripleC2 T = T_of(L), D = T.dual();
        const Rational n = rand_scale(rng, f->q());
        const D2Elem x = rand_D2(rng, T.mid(), L.o, c.cap);
        cmp(fourier2(pull_alpha(T, x, n), D.quot()), push_beta(D, fourier2(x, D.mid()), n), "F alpha^* = alpha^_* F on D", w);
        const D2Dist g = rand_D2p(rng, T.sub(), L.o, c.cap);
        cmp(fourier2(push_alpha(T, g, n), D.mid()), pull_beta(D, fourier2(g, D.quot()), n), "F alpha_* = alpha^^* F on D'", w);
    });
    repeat(c, [&](const Layout& L) { return pc(L, 0, 1)->cfC2(); }, [&](const Layout& L, const std::string& w) {
        const TripleC2 T = T_of(L), D = T.dual();
        const D2Elem y = rand_D2(rng, T.quot(), L.o, c.cap);
        cmp(fourier2(pull_beta(T, y), D.mid()), push_alpha(D, fourier2(y, D.sub())), "F beta^* = beta^_* F on D", w);
        const D2Dist g = rand_D2p(rng, T.mid(), L.o, c.cap);
        cmp(fourier2(push_beta(T, g), D.sub()), pull_alpha(D, fourier2(g, D.mid())), "F beta_* = beta^^* F on D'", w);
    });
    repeat(c, [&](const Layout& L) { return pc(L, 1, 3)->dfC2(); }, [&](const Layout& L, const std::string& w) {
        const TripleC2 T = T_of(L), D = T.dual();
        const D2Elem x = rand_D2(rng, T.sub(), L.o, c.cap);
        cmp(fourier2(push_alpha(T, x), D.mid()), pull_beta(D, fourier2(x, D.quot())), "F alpha_* = alpha^^* F on D", w);
        const D2Dist g = rand_D2p(rng, T.mid(), L.o, c.cap);
        cmp(fourier2(pull_alpha(T, g), D.quot()), push_beta(D, fourier2(g, D.mid())), "F alpha^* = alpha^_* F on D'", w);
    });
}

}  // namespace fh::harness::detail
