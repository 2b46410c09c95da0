#include "oracles.hpp"

#include <doctest.h>

using namespace fh;

namespace {

int dot(const FqField& f, const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s = f.add(s, f.mul(a[k], b[k]));
    return s;
}

}  // namespace

TEST_CASE("index enumeration is little-endian in q") {
    const FinSpace v(FqField::standard(3), 3);
    CHECK(v.size() == 27);
    CHECK(v.digits(5) == std::vector<int>{2, 1, 0});
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v.index(v.digits(i)) == i);
}

TEST_CASE("fast transform equals the direct sum") {
    oracle::Gen g(3);
    for (int q : {2, 3, 4, 5, 9})
        for (int n = 0; n <= (q <= 3 ? 4 : 2); ++n) {
            const FinSpace v(FqField::standard(q), n);
            for (int t = 0; t < 3; ++t) {
                const Fn0 f = g.table(v);
                CHECK(fourier0(f) == oracle::dft(f));
            }
        }
}

TEST_CASE("subspace enumeration counts") {
    for (int q : {2, 3, 4})
        for (int n = 0; n <= 3; ++n) {
            const FinSpace v(FqField::standard(q), n);
            const auto subs = enumerate_subspaces(v);
            long total = 0;
            for (int k = 0; k <= n; ++k) total += oracle::gaussian_binomial(n, k, q);
            CHECK(static_cast<long>(subs.size()) == total);
            for (const auto& h : subs) CHECK(h.elements().size() == static_cast<std::size_t>(std::pow(q, h.dim())));
        }
}

TEST_CASE("annihilators are orthogonal complements") {
    for (int q : {2, 3, 4}) {
        const FinSpace v(FqField::standard(q), 3);
        for (const auto& h : enumerate_subspaces(v)) {
            const Subspace0 a = annihilator0(h);
            CHECK(a.dim() == 3 - h.dim());
            for (auto x : h.elements())
                for (auto y : a.elements()) CHECK(dot(v.field(), v.digits(x), v.digits(y)) == 0);
            CHECK(annihilator0(a) == h);
        }
    }
}

TEST_CASE("Poisson formula on F_2^2, written out") {
    // H = span{(1,0)}: F(delta_H) = 2 delta_{H-perp}, H-perp = span{(0,1)}.
    const FinSpace v(FqField::standard(2), 2);
    const Subspace0 h(v, {{1, 0}});
    const Fn0 lhs = fourier0(Fn0::indicator(h));
    const std::vector<int> expect{2, 0, 2, 0};
    for (std::size_t i = 0; i < 4; ++i) CHECK(lhs[i] == CycNum(2, Rational(expect[i])));
}

TEST_CASE("Poisson formula for every subspace") {
    for (int q : {2, 3, 4})
        for (int n = 0; n <= 3; ++n) {
            const FinSpace v(FqField::standard(q), n);
            for (const auto& h : enumerate_subspaces(v))
                CHECK(fourier0(Fn0::indicator(h)) == Fn0::indicator(annihilator0(h)) * qpow(q, h.dim()));
        }
}

TEST_CASE("property: inversion and self-adjointness") {
    oracle::Gen g(5);
    for (int q : {2, 3, 4})
        for (int t = 0; t < 30; ++t) {
            const int n = static_cast<int>(g.uniform(0, 3));
            const FinSpace v(FqField::standard(q), n);
            const Fn0 f = g.table(v), h = g.table(v);
            CHECK(fourier0(fourier0(f)) == check0(f) * qpow(q, n));
            CHECK(pairing0(fourier0(f), h) == pairing0(f, fourier0(h)));
        }
}

TEST_CASE("property: images match their definitions") {
    oracle::Gen g(8);
    for (int t = 0; t < 40; ++t) {
        const FieldPtr fld = FqField::standard(static_cast<int>(g.uniform(0, 1)) == 0 ? 2 : 3);
        const FinSpace v(fld, static_cast<int>(g.uniform(0, 3))), w(fld, static_cast<int>(g.uniform(0, 3)));
        const LinMap pi = g.map(v, w);
        const Fn0 f = g.table(v), h = g.table(w);
        Fn0 push(w);
        for (std::size_t x = 0; x < v.size(); ++x) push[pi.apply(x)] += f[x];
        CHECK(push0(pi, f) == push);
        const Fn0 pull = pull0(pi, h);
        for (std::size_t x = 0; x < v.size(); ++x) CHECK(pull[x] == h[pi.apply(x)]);
        // The transform exchanges the two images through the transpose.
        CHECK(fourier0(push0(pi, f)) == pull0(dual_map(pi), fourier0(f)));
        // Transpose: <pi v, u> = <v, pi' u>.
        const LinMap pt = dual_map(pi);
        for (std::size_t x = 0; x < v.size(); ++x)
            for (std::size_t u = 0; u < w.size(); ++u)
                CHECK(dot(*fld, w.digits(pi.apply(x)), w.digits(u)) == dot(*fld, v.digits(x), v.digits(pt.apply(u))));
    }
}

TEST_CASE("translation and reflection") {
    oracle::Gen g(9);
    const FinSpace v(FqField::standard(3), 2);
    const Fn0 f = g.table(v);
    for (std::size_t a = 0; a < v.size(); ++a) {
        const Fn0 t = translate0(f, a);
        for (std::size_t x = 0; x < v.size(); ++x) CHECK(t[v.add(x, a)] == f[x]);
    }
    for (std::size_t x = 0; x < v.size(); ++x) CHECK(check0(f)[x] == f[v.neg(x)]);
    CHECK(check0(check0(f)) == f);
}

TEST_CASE("linear maps compose") {
    oracle::Gen g(10);
    const FieldPtr fld = FqField::standard(4);
    const FinSpace a(fld, 2), b(fld, 3), c(fld, 1);
    const LinMap m = g.map(a, b), n = g.map(b, c);
    const LinMap nm = n.compose(m);
    for (std::size_t x = 0; x < a.size(); ++x) CHECK(nm.apply(x) == n.apply(m.apply(x)));
    CHECK_THROWS(m.compose(m));
}
