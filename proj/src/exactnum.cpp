/**
 * @file exactnum.cpp
 * @brief Cyclotomic and finite field arithmetic.
 */
#include "filtharm/exactnum.hpp"

#include <sstream>

namespace fh {

Rational qpow(long q, long e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(z);
    Rational r(mpz_class(1), z);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- CycNum

CycNum::CycNum(int p) : p_(p), c_(static_cast<size_t>(p - 1)) {
    if (p < 2) throw DomainError("CycNum: prime must be >= 2");
}

CycNum::CycNum(int p, const Rational& r) : CycNum(p) { c_[0] = r; }

CycNum::CycNum(int p, std::vector<Rational> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != p - 1)
        throw DomainError("CycNum: expected p-1 coefficients");
}

CycNum CycNum::zeta(int p, long k) {
    CycNum one(p, Rational(1));
    return one.mul_zeta(k);
}

bool CycNum::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

void CycNum::promote_to(int p) {
    if (p == p_) return;
    if (!is_rational()) throw DomainError("CycNum: mixing different cyclotomic fields");
    Rational r = c_[0];
    p_ = p;
    c_.assign(static_cast<size_t>(p - 1), Rational(0));
    c_[0] = r;
}

CycNum CycNum::mul_zeta(long k) const {
    const long p = p_;
    long s = ((k % p) + p) % p;
    if (s == 0 || p == 2) {
        if (p == 2 && (s % 2 == 1)) return -*this;
        return *this;
    }
    // Length-p buffer with buf[p-1] = 0, rotate, then subtract the top entry.
    std::vector<Rational> buf(static_cast<size_t>(p));
    for (long i = 0; i < p - 1; ++i) buf[static_cast<size_t>((i + s) % p)] = c_[static_cast<size_t>(i)];
    CycNum out(p_);
    const Rational& top = buf[static_cast<size_t>(p - 1)];
    for (long i = 0; i < p - 1; ++i) out.c_[static_cast<size_t>(i)] = buf[static_cast<size_t>(i)] - top;
    return out;
}

CycNum CycNum::conj() const {
    if (p_ == 2) return *this;
    const int p = p_;
    std::vector<Rational> buf(static_cast<size_t>(p));
    for (int i = 0; i < p - 1; ++i) buf[static_cast<size_t>((p - i) % p)] = c_[static_cast<size_t>(i)];
    CycNum out(p_);
    const Rational& top = buf[static_cast<size_t>(p - 1)];
    for (int i = 0; i < p - 1; ++i) out.c_[static_cast<size_t>(i)] = buf[static_cast<size_t>(i)] - top;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.p_ != p_) {
        if (o.is_rational()) {
            c_[0] += o.c_[0];
            return *this;
        }
        promote_to(o.p_);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (o.p_ != p_) {
        if (o.is_rational()) {
            c_[0] -= o.c_[0];
            return *this;
        }
        promote_to(o.p_);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        Rational r = c_[0];
        *this = o;
        return *this *= r;
    }
    if (o.p_ != p_) throw DomainError("CycNum: mixing different cyclotomic fields");
    const int p = p_;
    std::vector<Rational> buf(static_cast<size_t>(p));
    for (int i = 0; i < p - 1; ++i) {
        if (sgn(c_[static_cast<size_t>(i)]) == 0) continue;
        for (int j = 0; j < p - 1; ++j) {
            if (sgn(o.c_[static_cast<size_t>(j)]) == 0) continue;
            buf[static_cast<size_t>((i + j) % p)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    const Rational top = buf[static_cast<size_t>(p - 1)];
    for (int i = 0; i < p - 1; ++i) c_[static_cast<size_t>(i)] = buf[static_cast<size_t>(i)] - top;
    return *this;
}

CycNum CycNum::operator-() const {
    CycNum out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.p_ != b.p_) {
        if (!a.is_rational() || !b.is_rational()) return false;
        return a.c_[0] == b.c_[0];
    }
    return a.c_ == b.c_;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i > 0) os << "*z^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- FqField

namespace {

using Poly = std::vector<int>;  // coefficients low to high, mod p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-or-not b over F_p.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    int lead_inv = 1;
    for (int x = 1; x < p; ++x)
        if ((b.back() * x) % p == 1) lead_inv = x;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int f = (a.back() * lead_inv) % p;
        for (int i = 0; i <= db; ++i) {
            int& t = a[static_cast<size_t>(i + shift)];
            t = ((t - f * b[static_cast<size_t>(i)]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

FqField::FqField(int p, int n, std::vector<int> modulus) : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw DomainError("FqField: p is not prime");
    if (n < 1) throw DomainError("FqField: degree must be positive");
    if (static_cast<int>(modulus_.size()) != n + 1) throw DomainError("FqField: modulus must list n+1 coefficients");
    for (auto& c : modulus_) c = ((c % p) + p) % p;
    if (modulus_.back() != 1) throw DomainError("FqField: modulus must be monic");
    for (int i = 0; i < n; ++i) q_ *= p;
    // Trial division by every monic polynomial of degree 1..n/2.
    for (int d = 1; 2 * d <= n; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int idx = 0; idx < count; ++idx) {
            Poly f(static_cast<size_t>(d + 1));
            int t = idx;
            for (int i = 0; i < d; ++i) {
                f[static_cast<size_t>(i)] = t % p;
                t /= p;
            }
            f[static_cast<size_t>(d)] = 1;
            if (poly_mod(modulus_, f, p).empty()) throw DomainError("FqField: modulus is reducible");
        }
    }
    build_tables();
}

FieldPtr FqField::make(int p, int n, std::vector<int> modulus) {
    return FieldPtr(new FqField(p, n, std::move(modulus)));
}

FieldPtr FqField::standard(int q) {
    switch (q) {
        case 2: return make(2, 1, {0, 1});
        case 3: return make(3, 1, {0, 1});
        case 4: return make(2, 2, {1, 1, 1});
        case 5: return make(5, 1, {0, 1});
        case 7: return make(7, 1, {0, 1});
        case 8: return make(2, 3, {1, 1, 0, 1});
        case 9: return make(3, 2, {1, 0, 1});
        case 16: return make(2, 4, {1, 1, 0, 0, 1});
        default: throw DomainError("FqField::standard: no built-in modulus for q=" + std::to_string(q));
    }
}

std::vector<int> FqField::coeffs(int a) const {
    std::vector<int> c(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        c[static_cast<size_t>(i)] = a % p_;
        a /= p_;
    }
    return c;
}

int FqField::from_coeffs(const std::vector<int>& c) const {
    int a = 0;
    for (int i = n_ - 1; i >= 0; --i) a = a * p_ + ((c[static_cast<size_t>(i)] % p_) + p_) % p_;
    return a;
}

void FqField::build_tables() {
    const size_t qq = static_cast<size_t>(q_) * static_cast<size_t>(q_);
    add_.assign(qq, 0);
    mul_.assign(qq, 0);
    neg_.assign(static_cast<size_t>(q_), 0);
    inv_.assign(static_cast<size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        const auto ca = coeffs(a);
        std::vector<int> cn(ca);
        for (auto& x : cn) x = (p_ - x) % p_;
        neg_[static_cast<size_t>(a)] = from_coeffs(cn);
        for (int b = 0; b < q_; ++b) {
            const auto cb = coeffs(b);
            std::vector<int> s(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i) s[static_cast<size_t>(i)] = (ca[static_cast<size_t>(i)] + cb[static_cast<size_t>(i)]) % p_;
            add_[static_cast<size_t>(a * q_ + b)] = from_coeffs(s);
            Poly prod(static_cast<size_t>(2 * n_));
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    prod[static_cast<size_t>(i + j)] = (prod[static_cast<size_t>(i + j)] + ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(j)]) % p_;
            Poly r = poly_mod(prod, modulus_, p_);
            r.resize(static_cast<size_t>(n_));
            mul_[static_cast<size_t>(a * q_ + b)] = from_coeffs(r);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) inv_[static_cast<size_t>(a)] = b;
    tr_.assign(static_cast<size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        int s = 0, x = a;
        for (int k = 0; k < n_; ++k) {
            s = add(s, x);
            int y = 1;
            for (int e = 0; e < p_; ++e) y = mul(y, x);
            x = y;
        }
        if (s >= p_) throw DomainError("FqField: trace left the prime field (modulus invalid)");
        tr_[static_cast<size_t>(a)] = s;
    }
    trmul_.assign(qq, 0);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) trmul_[static_cast<size_t>(a * q_ + b)] = tr_[static_cast<size_t>(mul(a, b))];
}

int FqField::inv(int a) const {
    if (a == 0) throw DomainError("FqField: inverse of zero");
    return inv_[static_cast<size_t>(a)];
}

FieldPtr FqField::with_trivial_character() const {
    auto f = std::shared_ptr<FqField>(new FqField(*this));
    f->trivial_psi_ = true;
    std::fill(f->tr_.begin(), f->tr_.end(), 0);
    std::fill(f->trmul_.begin(), f->trmul_.end(), 0);
    return f;
}

std::string FqField::descriptor() const {
    std::ostringstream os;
    os << p_ << "," << n_ << ",[";
    for (size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- FqElem

FqElem::FqElem(FieldPtr f, int idx) : f_(std::move(f)), idx_(idx) {
    if (idx < 0 || idx >= f_->q()) throw DomainError("FqElem: index out of range");
}

void FqElem::same_field(const FqElem& o) const {
    if (f_.get() != o.f_.get()) throw DomainError("FqElem: field mismatch");
}

FqElem FqElem::operator+(const FqElem& o) const {
    same_field(o);
    return {f_, f_->add(idx_, o.idx_)};
}
FqElem FqElem::operator-(const FqElem& o) const {
    same_field(o);
    return {f_, f_->sub(idx_, o.idx_)};
}
FqElem FqElem::operator-() const { return {f_, f_->neg(idx_)}; }
FqElem FqElem::operator*(const FqElem& o) const {
    same_field(o);
    return {f_, f_->mul(idx_, o.idx_)};
}
FqElem FqElem::inv() const { return {f_, f_->inv(idx_)}; }

FqElem fq_ops(const FqElem& a, const FqElem& b, FqOp kind) {
    switch (kind) {
        case FqOp::Add: return a + b;
        case FqOp::Mul: return a * b;
        case FqOp::Inv: return a.inv();
    }
    return a;
}

CycNum psi(const FqField& f, int x) { return CycNum::zeta(f.p(), f.trace(x)); }
CycNum psi(const FqElem& x) { return psi(x.field(), x.index()); }

}  // namespace fh
