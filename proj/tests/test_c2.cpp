#include "filtharm/c2.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fh;

namespace {

// Coordinates with k_i >= 0 in slices [i, j) of a model with constant inner interval [a, b).
long upper_coords(long a, long b, long i, long j) { return (j - i) * std::max(0L, b - std::max(a, 0L)); }

}  // namespace

TEST_CASE("classes of the standard models") {
    const FieldPtr f = FqField::standard(2);
    CHECK(C2Model::outer_lattice(f, 0).cC2());
    CHECK_FALSE(C2Model::outer_lattice(f, 0).dC2());
    CHECK(C2Model::outer_quotient(f, 0).dC2());
    CHECK(C2Model::inner_lattice(f, 0).cfC2());
    CHECK_FALSE(C2Model::inner_lattice(f, 0).dfC2());
    CHECK(C2Model::inner_quotient(f, 0).dfC2());
    const C2Model k = C2Model::k2(f);
    CHECK_FALSE(k.cC2());
    CHECK_FALSE(k.cfC2());
    CHECK(k.dual() == k);
    CHECK(k.transformed(2, -1) == k);
    CHECK(C2Model::inner_lattice(f, 1).dual().dfC2());
    // F(i)/F(l) has one slot per slice.
    CHECK(k.inner(-1, 2)->slots().size() == 3);
    CHECK(C2Model::inner_lattice(f, 0).biwindow_dim(0, 2, -1, 0) == 2);
}

TEST_CASE("virtual measures form a groupoid") {
    const FieldPtr f = FqField::standard(3);
    const C2Ptr k = make_model(C2Model::k2(f));
    for (long i = -4; i <= 4; ++i)
        for (long j = -4; j <= 4; ++j) {
            const VirtualMeasure v(k, i, j, frac(2, 5), j - i);
            CHECK(v.compose(v.inverse()) == VirtualMeasure::identity(k, i));
            for (long l = -2; l <= 2; ++l) {
                const VirtualMeasure w(k, j, l, frac(-3, 2), 1), x(k, l, i, 7, 0);
                CHECK(v.compose(w).compose(x) == v.compose(w.compose(x)));
                CHECK(v.compose(w).scalar() == v.scalar() * w.scalar());
            }
        }
    CHECK_THROWS(VirtualMeasure(k, 0, 1).compose(VirtualMeasure(k, 2, 3)));
}

TEST_CASE("canonical measures have the expected mass") {
    const FieldPtr f = FqField::standard(2);
    for (long m = -2; m <= 2; ++m) {
        // u^m F[[u]]((t)): slices [-inf, -m); b_{ij} weighs the k_i < 0 part, so 1_{ij} = q^{-N} b_{ij}.
        const C2Ptr lat = make_model(C2Model::inner_lattice(f, m));
        // Quotient by u^m F[[u]]((t)): slices [-m, inf); the k_i < 0 part has q^{M} points, so δ = q^{M} b.
        const C2Ptr quo = make_model(C2Model::inner_quotient(f, m));
        for (long i = -3; i <= 3; ++i)
            for (long j = i; j <= 3; ++j) {
                const auto one = VirtualMeasure::canonical(lat, i, j, VirtualMeasure::Kind::One);
                CHECK(one.scalar() == qpow(2, -upper_coords(-kInf, -m, i, j)));
                const auto del = VirtualMeasure::canonical(quo, i, j, VirtualMeasure::Kind::Delta);
                CHECK(del.scalar() == qpow(2, (j - i) * std::max(0L, m)));
                for (long l = j; l <= 3; ++l) {
                    CHECK(one.compose(VirtualMeasure::canonical(lat, j, l, VirtualMeasure::Kind::One)) ==
                          VirtualMeasure::canonical(lat, i, l, VirtualMeasure::Kind::One));
                }
            }
        CHECK_THROWS_AS(VirtualMeasure::canonical(quo, 0, 1, VirtualMeasure::Kind::One), CapabilityError);
    }
}

TEST_CASE("commutators in the central extension") {
    const FieldPtr f = FqField::standard(3);
    const C2Ptr k = make_model(C2Model::k2(f));
    const FqElem one(f, 1), two(f, 2);
    const AutHat t(k, 0, AutElem(1, 0, one)), u(k, 0, AutElem(0, 1, one));
    const auto comm = [](const AutHat& x, const AutHat& y) { return x * y * x.inverse() * y.inverse(); };
    CHECK(comm(t, u).g() == AutElem::identity(f));
    CHECK(comm(t, u).lambda() == 3);
    CHECK(comm(u, t).lambda() == frac(1, 3));
    CHECK(comm(t * t, u).lambda() == 9);
    // Constants are central.
    const AutHat c(k, 0, AutElem(0, 0, two), frac(1, 2), 1);
    CHECK(comm(c, t).lambda() == 1);
    oracle::Gen g(31);
    for (int n = 0; n < 100; ++n) {
        const long o = g.uniform(-2, 2);
        const auto rnd = [&] {
            return AutHat(k, o, AutElem(g.uniform(-2, 2), g.uniform(-2, 2), FqElem(f, static_cast<int>(g.uniform(1, 2)))),
                          frac(g.uniform(1, 3), g.uniform(1, 3)), g.uniform(-2, 2));
        };
        const AutHat x = rnd(), y = rnd(), z = rnd();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * x.inverse() == AutHat::identity(k, o));
        CHECK(comm(x, y).lambda() == qpow(3, x.g().a() * y.g().b() - x.g().b() * y.g().a()));
    }
}

TEST_CASE("monomial automorphisms") {
    const FieldPtr f = FqField::standard(4);
    const AutElem g(1, -2, FqElem(f, 2)), h(-3, 1, FqElem(f, 3));
    const AutElem gh = g * h;
    CHECK(gh.a() == -2);
    CHECK(gh.b() == -1);
    CHECK(gh.c() == FqElem(f, 2) * FqElem(f, 3));
    CHECK(g * g.inverse() == AutElem::identity(f));
}

TEST_CASE("two-dimensional Poisson formulas at q = 2") {
    const FieldPtr f = FqField::standard(2);
    const C2Ptr k = make_model(C2Model::k2(f));
    for (long m = 0; m <= 1; ++m) {
        const TripleC2 II = TripleC2::split(k, {{-kInf, -m}});
        const auto r2 = poisson2_verify(PoissonKind::II, II, 0, 1, 1, 1, 64);
        CHECK(r2.ok);
        CHECK(r2.windows > 0);
        const TripleC2 I = TripleC2::split(k, {{-kInf, kInf}, {-m, -kInf}});
        for (const Rational mu : {Rational(1), Rational(2), frac(1, 2)}) {
            const auto r1 = poisson2_verify(PoissonKind::I, I, 0, mu, 1 / mu, 1, 64);
            CHECK(r1.ok);
            CHECK(r1.windows > 0);
        }
    }
}

TEST_CASE("transform of the canonical function is the canonical delta") {
    const FieldPtr f = FqField::standard(2);
    const C2Ptr lat = make_model(C2Model::inner_lattice(f, 0));
    const C2Ptr dual = make_model(lat->dual());
    const auto r = compare2(fourier2(one(lat, 0), dual), delta0(dual, 0), 1, 64);
    CHECK(r.ok);
    CHECK(r.windows > 0);
}
