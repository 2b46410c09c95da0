#include "oracles.hpp"

#include <doctest.h>

using namespace fh;

TEST_CASE("frac reduces to lowest terms") {
    CHECK(frac(21, 24) == frac(7, 8));
    CHECK(frac(21, 24).get_num() == 7);
    CHECK(frac(3, -6).get_num() == -1);
    CHECK(qpow(2, -3) == frac(1, 8));
    CHECK(qpow(3, 4) == 81);
}

TEST_CASE("cyclotomic arithmetic agrees with complex evaluation") {
    oracle::Gen g(11);
    for (int p : {2, 3, 5, 7}) {
        for (int t = 0; t < 200; ++t) {
            const CycNum a = g.cyc(p), b = g.cyc(p), c = g.cyc(p);
            CHECK(oracle::close(oracle::eval(a * b), oracle::eval(a) * oracle::eval(b)));
            CHECK(oracle::close(oracle::eval(a + b), oracle::eval(a) + oracle::eval(b)));
            CHECK(oracle::close(oracle::eval(a.conj()), std::conj(oracle::eval(a))));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == CycNum(p));
        }
    }
}

TEST_CASE("roots of unity") {
    for (int p : {2, 3, 5, 7}) {
        CycNum sum(p);
        for (int k = 0; k < p; ++k) sum += CycNum::zeta(p, k);
        CHECK(sum.is_zero());
        CHECK(CycNum::zeta(p, p) == CycNum(p, Rational(1)));
        CHECK(CycNum::zeta(p, 2) * CycNum::zeta(p, -2) == CycNum(p, Rational(1)));
        CHECK(CycNum::zeta(p, 1).conj() == CycNum::zeta(p, p - 1));
        CHECK(CycNum(p, frac(3, 4)).is_rational());
        if (p > 2) CHECK_FALSE(CycNum::zeta(p, 1).is_rational());
    }
}

TEST_CASE("mixing cyclotomic fields of different primes is rejected") {
    CHECK_THROWS_AS(CycNum::zeta(3, 1) + CycNum::zeta(5, 1), DomainError);
    // Rationals combine with anything.
    CHECK(CycNum(2, Rational(2)) * CycNum::zeta(5, 1) == CycNum::zeta(5, 1) * Rational(2));
}

TEST_CASE("finite field axioms, exhaustively") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldPtr f = FqField::standard(q);
        CAPTURE(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                }
            }
        }
        CHECK_THROWS_AS(f->inv(0), DomainError);
    }
}

TEST_CASE("trace matches the Frobenius sum") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
        const FieldPtr f = FqField::standard(q);
        for (int a = 0; a < q; ++a) CHECK(f->trace(a) == oracle::trace(*f, a));
    }
}

TEST_CASE("psi is a nontrivial additive character") {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        const FieldPtr f = FqField::standard(q);
        CycNum sum(f->p());
        for (int x = 0; x < q; ++x) {
            sum += psi(*f, x);
            for (int y = 0; y < q; ++y) CHECK(psi(*f, f->add(x, y)) == psi(*f, x) * psi(*f, y));
        }
        CHECK(sum.is_zero());
    }
    const FieldPtr t = FqField::standard(3)->with_trivial_character();
    CHECK(t->character_trivialized());
    for (int x = 0; x < 3; ++x) CHECK(psi(*t, x) == CycNum(3, Rational(1)));
}

TEST_CASE("field construction validates the modulus") {
    CHECK_THROWS_AS(FqField::make(4, 1, {0, 1}), DomainError);
    CHECK_THROWS_AS(FqField::make(2, 2, {1, 0, 1}), DomainError);  // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(FqField::make(2, 2, {1, 1, 0}), DomainError);
    CHECK_THROWS_AS(FqField::standard(6), DomainError);
    const FieldPtr f = FqField::make(3, 2, {2, 2, 1});  // x^2+2x+2 is irreducible over F_3
    CHECK(f->q() == 9);
}

TEST_CASE("FqElem wraps the index arithmetic") {
    const FieldPtr f = FqField::standard(4);
    const FqElem a(f, 2), b(f, 3);
    CHECK((a + b).index() == f->add(2, 3));
    CHECK((a * b).index() == f->mul(2, 3));
    CHECK((a * a.inv()).index() == 1);
    CHECK(fq_ops(a, b, FqOp::Mul) == a * b);
    CHECK_THROWS_AS(FqElem(f, 4), DomainError);
    CHECK_THROWS_AS(a + FqElem(FqField::standard(4), 1), DomainError);
}
