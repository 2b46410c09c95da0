#pragma once
/**
 * @file exactnum.hpp
 * @brief Exact scalars: GMP rationals, the cyclotomic field Q(zeta_p), and
 *        small finite fields F_q with the additive character psi.
 */

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fh {

using Rational = mpq_class;

/// n/d in lowest terms (mpq_class(n, d) alone is not canonical).
inline Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// q^e as an exact rational (e may be negative).
Rational qpow(long q, long e);

std::string to_string(const Rational& r);

/**
 * @brief Element of Q(zeta_p) in the power basis 1, zeta, ..., zeta^{p-2}.
 *
 * Values whose only nonzero coefficient is the constant term are treated as
 * rationals and may be combined with a CycNum of any prime.
 */
class CycNum {
public:
    CycNum() : p_(2), c_(1) {}
    explicit CycNum(int p);
    CycNum(int p, const Rational& r);
    CycNum(int p, std::vector<Rational> coeffs);

    /// zeta_p^k for any integer k.
    static CycNum zeta(int p, long k);

    int prime() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coefficient; meaningful when is_rational().
    const Rational& rational() const { return c_[0]; }

    /// Galois conjugation zeta -> zeta^{-1} (complex conjugation).
    CycNum conj() const;
    /// Multiply by zeta^k, a cyclic rotation of the length-p representation.
    CycNum mul_zeta(long k) const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const Rational& r);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator*(CycNum a, const Rational& r) { return a *= r; }
    friend CycNum operator*(const Rational& r, CycNum a) { return a *= r; }
    CycNum operator-() const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Human readable, e.g. "1/2 + 3*z^1".
    std::string str() const;

private:
    void promote_to(int p);

    int p_;
    std::vector<Rational> c_;
};

inline CycNum cyc_conj(const CycNum& z) { return z.conj(); }

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

/**
 * @brief F_q = F_p[x]/(modulus). Elements are indices Σ c_i p^i with the
 * least significant coefficient first; arithmetic goes through tables.
 */
class FqField : public std::enable_shared_from_this<FqField> {
public:
    /// modulus lists c_0..c_n and must be monic of degree n.
    static FieldPtr make(int p, int n, std::vector<int> modulus);
    /// Built-in moduli for q in {2,3,4,5,7,8,9,16}.
    static FieldPtr standard(int q);

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;
    /// Absolute trace into F_p, computed as Σ_k a^{p^k}.
    int trace(int a) const { return tr_[a]; }
    /// trace(a*b), the exponent of psi(a*b).
    int trmul(int a, int b) const { return trmul_[a * q_ + b]; }

    std::vector<int> coeffs(int a) const;
    int from_coeffs(const std::vector<int>& c) const;

    /// Copy whose character is trivial; used only by negative controls.
    FieldPtr with_trivial_character() const;
    bool character_trivialized() const { return trivial_psi_; }

    std::string descriptor() const;

private:
    FqField(int p, int n, std::vector<int> modulus);
    void build_tables();

    int p_, n_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_, tr_, trmul_;
    bool trivial_psi_ = false;
};

class FqElem {
public:
    FqElem(FieldPtr f, int idx);

    const FqField& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    int index() const { return idx_; }
    std::vector<int> coeffs() const { return f_->coeffs(idx_); }
    bool is_zero() const { return idx_ == 0; }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator-() const;
    FqElem operator*(const FqElem& o) const;
    FqElem inv() const;

    bool operator==(const FqElem& o) const { return f_.get() == o.f_.get() && idx_ == o.idx_; }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

private:
    void same_field(const FqElem& o) const;

    FieldPtr f_;
    int idx_;
};

enum class FqOp { Add, Mul, Inv };
FqElem fq_ops(const FqElem& a, const FqElem& b, FqOp kind);

/// psi(x) = zeta_p^{Tr x}.
CycNum psi(const FqElem& x);
CycNum psi(const FqField& f, int x);

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace fh
