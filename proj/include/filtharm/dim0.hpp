#pragma once
/**
 * @file dim0.hpp
 * @brief Functions on finite F_q-vector spaces: pairing, push/pull along
 *        linear maps, Fourier transform and annihilators.
 */

#include "filtharm/exactnum.hpp"

#include <cstddef>
#include <vector>

namespace fh {

/**
 * @brief F_q^dim with points enumerated by Σ x_j q^j (coordinate 0 least
 * significant).
 */
class FinSpace {
public:
    FinSpace() = default;
    FinSpace(FieldPtr f, int dim);

    const FqField& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    int q() const { return f_->q(); }
    int p() const { return f_->p(); }
    int dim() const { return dim_; }
    std::size_t size() const { return size_; }

    std::vector<int> digits(std::size_t idx) const;
    std::size_t index(const std::vector<int>& digits) const;
    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;
    std::size_t scale(int c, std::size_t a) const;

    bool operator==(const FinSpace& o) const { return f_.get() == o.f_.get() && dim_ == o.dim_; }
    bool operator!=(const FinSpace& o) const { return !(*this == o); }

private:
    FieldPtr f_;
    int dim_ = 0;
    std::size_t size_ = 1;
};

/// Largest table a computation is allowed to allocate.
inline constexpr std::size_t kTableCap = 4096;

class LinMap {
public:
    /// rows.size() == tgt.dim, each row of length src.dim.
    LinMap(FinSpace src, FinSpace tgt, std::vector<std::vector<int>> rows);

    static LinMap identity(const FinSpace& v);
    static LinMap zero(const FinSpace& src, const FinSpace& tgt);
    /// Target coordinate j reads source coordinate sel[j] (or 0 when sel[j] < 0).
    static LinMap selection(const FinSpace& src, const FinSpace& tgt, const std::vector<int>& sel);

    const FinSpace& source() const { return src_; }
    const FinSpace& target() const { return tgt_; }
    int entry(int r, int c) const { return m_[static_cast<std::size_t>(r * src_.dim() + c)]; }

    std::vector<int> apply(const std::vector<int>& v) const;
    std::size_t apply(std::size_t idx) const;
    /// Image index of every source point.
    std::vector<std::size_t> image_table() const;

    /// (*this) ∘ inner
    LinMap compose(const LinMap& inner) const;

private:
    FinSpace src_, tgt_;
    std::vector<int> m_;
};

class Subspace0;

class Fn0 {
public:
    Fn0() = default;
    explicit Fn0(FinSpace sp);
    Fn0(FinSpace sp, std::vector<CycNum> table);

    static Fn0 constant(const FinSpace& sp, const CycNum& c);
    static Fn0 delta(const FinSpace& sp, std::size_t v);
    static Fn0 indicator(const Subspace0& h);

    const FinSpace& space() const { return sp_; }
    std::size_t size() const { return t_.size(); }
    const CycNum& operator[](std::size_t i) const { return t_[i]; }
    CycNum& operator[](std::size_t i) { return t_[i]; }
    const std::vector<CycNum>& table() const { return t_; }

    bool is_zero() const;

    Fn0& operator+=(const Fn0& o);
    Fn0& operator-=(const Fn0& o);
    Fn0& operator*=(const CycNum& c);
    Fn0& operator*=(const Rational& r);
    friend Fn0 operator+(Fn0 a, const Fn0& b) { return a += b; }
    friend Fn0 operator-(Fn0 a, const Fn0& b) { return a -= b; }
    friend Fn0 operator*(Fn0 a, const CycNum& c) { return a *= c; }
    friend Fn0 operator*(Fn0 a, const Rational& r) { return a *= r; }
    friend Fn0 operator*(const Rational& r, Fn0 a) { return a *= r; }
    /// Pointwise product.
    Fn0 hadamard(const Fn0& o) const;

    friend bool operator==(const Fn0& a, const Fn0& b);
    friend bool operator!=(const Fn0& a, const Fn0& b) { return !(a == b); }

private:
    FinSpace sp_;
    std::vector<CycNum> t_;
};

/// Subspace kept in reduced row echelon form, so equality is structural.
class Subspace0 {
public:
    Subspace0(FinSpace ambient, std::vector<std::vector<int>> spanning);

    const FinSpace& ambient() const { return amb_; }
    const std::vector<std::vector<int>>& basis() const { return rows_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    bool contains(const std::vector<int>& v) const;
    std::vector<std::size_t> elements() const;

    bool operator==(const Subspace0& o) const { return amb_ == o.amb_ && rows_ == o.rows_; }

private:
    FinSpace amb_;
    std::vector<std::vector<int>> rows_;
};

/// Every subspace of F_q^dim, one per reduced echelon form.
std::vector<Subspace0> enumerate_subspaces(const FinSpace& v);

CycNum pairing0(const Fn0& f, const Fn0& g);
Fn0 push0(const LinMap& pi, const Fn0& f);
Fn0 pull0(const LinMap& pi, const Fn0& g);
/// F(f)(u) = Σ_v f(v) conj(psi(u(v))), u(v) = Σ u_k v_k.
Fn0 fourier0(const Fn0& f);
Subspace0 annihilator0(const Subspace0& h);
/// f̌(v) = f(-v)
Fn0 check0(const Fn0& f);
/// (T_a f)(v) = f(v - a)
Fn0 translate0(const Fn0& f, std::size_t a);
/// Relabel points by reversing the order of coordinates.
Fn0 reverse_digits(const Fn0& f);
/// Transpose of a linear map, acting between dual spaces.
LinMap dual_map(const LinMap& m);

}  // namespace fh
