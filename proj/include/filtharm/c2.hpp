#pragma once
/**
 * @file c2.hpp
 * @brief Two-dimensional filtered spaces: bi-filtered models, virtual
 *        measures, the spaces D_{F(o)}, D'_{F(o)}, E, E' as lazy families of
 *        one-dimensional elements, Fourier transform, images along triples,
 *        the central extension of the monomial automorphism group and its
 *        representations, and both Poisson formulas.
 *
 * A model has basis vectors e_{(k_o, k_i)}; for F_q((u))((t)) the vector
 * e_{(k_o,k_i)} stands for t^{-1-k_o} u^{-1-k_i}. Slice k_o carries the inner
 * interval [a, b) of the last piece with from <= k_o. The outer filtration is
 * F(i) = {k_o < i + S}, and the quotient F(i)/F(l) is the one-dimensional
 * model with one slot per nonempty slice and inner shift s.
 *
 * Twists are kept in a reference basis: b_{l,j} (l <= j) is the Haar measure
 * on F(j)/F(l) giving mass 1 to the coordinates k_i < 0. These bases compose
 * (b_{l,j} b_{j,k} = b_{l,k}), so an element of D_{F(o)} is a family of plain
 * functions x_{l,i}, with x_{l,i} ⊗ b_{l,o} in the abstract space.
 */

#include "filtharm/c1.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fh {

struct Piece {
    long from = -kInf;
    long a = -kInf;
    long b = kInf;
    bool operator==(const Piece&) const = default;
};

class C2Model {
public:
    C2Model(FieldPtr f, std::vector<Piece> pieces, long outer_shift = 0, long inner_shift = 0, std::string name = "");

    /// F_q((u))((t)).
    static C2Model k2(FieldPtr f);
    /// t^m F_q((u))[[t]].
    static C2Model outer_lattice(FieldPtr f, long m);
    /// F_q((u))((t)) / t^m F_q((u))[[t]].
    static C2Model outer_quotient(FieldPtr f, long m);
    /// u^m F_q[[u]]((t)).
    static C2Model inner_lattice(FieldPtr f, long m);
    /// F_q((u))((t)) / u^m F_q[[u]]((t)).
    static C2Model inner_quotient(FieldPtr f, long m);

    const FqField& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    int q() const { return f_->q(); }
    const std::vector<Piece>& pieces() const { return pieces_; }
    long outer_shift() const { return S_; }
    long inner_shift() const { return s_; }
    const std::string& name() const { return name_; }

    /// Inner interval of slice k_o (label k_o).
    Slot slice(long ko) const;
    /// F(i)/F(l) as a one-dimensional model.
    ModelPtr inner(long l, long i) const;
    /// Number of coordinates in the bi-window.
    long biwindow_dim(long l, long i, long m, long n) const;

    bool cC2() const;   ///< F(i) = V for large i
    bool dC2() const;   ///< F(i) = 0 for small i
    bool cfC2() const;  ///< every F(i)/F(l) compact
    bool dfC2() const;  ///< every F(i)/F(l) discrete
    std::optional<long> top() const;
    std::optional<long> bottom() const;

    C2Model dual() const;
    /// Image under v -> c t^a u^b v.
    C2Model transformed(long a, long b) const;
    /// Same filtrations with F'(i) = F(i + da) and inner indices moved by db.
    C2Model reindexed(long da, long db) const;

    bool operator==(const C2Model& o) const { return pieces_ == o.pieces_ && S_ == o.S_ && s_ == o.s_; }

private:
    FieldPtr f_;
    std::vector<Piece> pieces_;
    long S_, s_;
    std::string name_;
};

using C2Ptr = std::shared_ptr<const C2Model>;
C2Ptr make_model(C2Model m);

/// Σ over slices k_o in [from+S, to+S) of clamp(b,α,β) - clamp(0,α,β), signed.
long lattice_shift_sum(const C2Model& m, long b, long from, long to);

/**
 * @brief scalar · b_{from,to}, with scalar = unit · q^exp and the exponent
 * kept separately (it is the integer central extension).
 */
class VirtualMeasure {
public:
    enum class Kind { One, Delta };

    VirtualMeasure(C2Ptr m, long from, long to, Rational unit = 1, long exp = 0);

    static VirtualMeasure identity(C2Ptr m, long i) { return {std::move(m), i, i}; }
    /// 1_{ij} (total mass 1, cfC2) or δ_{ij} (mass 1 at 0, dfC2).
    static VirtualMeasure canonical(C2Ptr m, long i, long j, Kind kind);

    const C2Ptr& model() const { return m_; }
    long from() const { return from_; }
    long to() const { return to_; }
    const Rational& unit() const { return unit_; }
    long exponent() const { return exp_; }
    Rational scalar() const;

    VirtualMeasure compose(const VirtualMeasure& o) const;
    VirtualMeasure inverse() const;
    /// The same scalar on the dual model: μ(F(l)|F(n)) = μ(F^0(l)|F^0(n)).
    VirtualMeasure dual(C2Ptr dual_model) const;

    bool operator==(const VirtualMeasure& o) const;

private:
    C2Ptr m_;
    long from_, to_;
    Rational unit_;
    long exp_;
};

/// v -> c t^a u^b v. Coordinates move by (-a, -b), so gF(i) = F(i - a).
class AutElem {
public:
    AutElem(long a, long b, FqElem c);
    static AutElem identity(FieldPtr f) { return {0, 0, FqElem(std::move(f), 1)}; }

    long a() const { return a_; }
    long b() const { return b_; }
    const FqElem& c() const { return c_; }

    AutElem operator*(const AutElem& o) const;  ///< (g h)(v) = g(h(v))
    AutElem inverse() const;
    /// ǧ^{-1} acting on the dual model.
    AutElem dual_inverse() const { return inverse(); }
    C2Model apply(const C2Model& m) const { return m.transformed(a_, b_); }
    /// l_g(b_{p,q}) = q^k b_{p-a,q-a}; returns k.
    long transport_exponent(const C2Model& m, long p, long q) const;

    bool operator==(const AutElem& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

private:
    long a_, b_;
    FqElem c_;
};

/// (g, μ) with μ ∈ μ(F(o) | gF(o)) = μ(F(o) | F(o - a)).
class AutHat {
public:
    AutHat(C2Ptr m, long o, AutElem g, Rational unit = 1, long exp = 0);
    static AutHat identity(C2Ptr m, long o);

    const C2Ptr& model() const { return m_; }
    long basepoint() const { return o_; }
    const AutElem& g() const { return g_; }
    const VirtualMeasure& mu() const { return mu_; }
    Rational lambda() const { return mu_.scalar(); }

    AutHat operator*(const AutHat& o) const;
    AutHat inverse() const;
    /// (ǧ^{-1}, μ) on the dual model with basepoint -o.
    AutHat dual(C2Ptr dual_model) const;

    bool operator==(const AutHat& o) const { return o_ == o.o_ && g_ == o.g_ && mu_ == o.mu_; }

private:
    C2Ptr m_;
    long o_;
    AutElem g_;
    VirtualMeasure mu_;
};

class E2Fn;

/// Element of D_{F(o)}: x_{l,i} is given for l <= lmax, i >= imin and is
/// moved elsewhere by restriction (i down) and fiber integration (l up).
class D2Elem {
public:
    using Core = std::function<Fn1(long l, long i)>;

    D2Elem(C2Ptr m, long o, long lmax, long imin, Core core);

    /// The D function given on the bi-window, extended by lattice indicators.
    static D2Elem from_biwindow(C2Ptr m, long o, long l, long i, long lo, long hi, Fn0 table);

    const C2Ptr& model() const { return m_; }
    long basepoint() const { return o_; }
    long lmax() const { return lmax_; }
    long imin() const { return imin_; }

    Fn1 at(long l, long i) const;

    D2Elem operator+(const D2Elem& o) const;
    D2Elem operator-(const D2Elem& o) const;
    D2Elem scaled(const Rational& r) const;
    D2Elem scaled(const CycNum& c) const;
    D2Elem checked() const;
    /// D_{F(o)} ⊗ μ(F(o)|F(o1)) = D_{F(o1)}.
    D2Elem rebased(const VirtualMeasure& v) const;
    D2Elem reindexed(long da, long db) const;

private:
    C2Ptr m_;
    long o_, lmax_, imin_;
    Core core_;
};

/// Element of D'_{F(o)}: G_{l,i} is available for l <= lmax, i >= imin.
class D2Dist {
public:
    using Core = std::function<Dist1(long l, long i)>;

    D2Dist(C2Ptr m, long o, long lmax, long imin, Core core);

    /// G given on F(i)/F(l), extended by Haar profile downward and by zero upward.
    static D2Dist from_window(C2Ptr m, long o, long l, long i, Dist1 g);

    const C2Ptr& model() const { return m_; }
    long basepoint() const { return o_; }
    long lmax() const { return lmax_; }
    long imin() const { return imin_; }

    Dist1 at(long l, long i) const;

    D2Dist operator+(const D2Dist& o) const;
    D2Dist operator-(const D2Dist& o) const;
    D2Dist scaled(const Rational& r) const;
    D2Dist checked() const;
    D2Dist rebased(const VirtualMeasure& v) const;  ///< v ∈ μ(F(o1)|F(o))
    D2Dist reindexed(long da, long db) const;

private:
    C2Ptr m_;
    long o_, lmax_, imin_;
    Core core_;
};

CycNum pair(const D2Elem& x, const D2Dist& g);

/// Function on the whole space, invariant under F(lmax).
class E2Fn {
public:
    enum class Tag { E, Etilde };
    using Core = std::function<Fn1(long l, long i)>;

    E2Fn(C2Ptr m, Tag tag, long lmax, Core core);

    /// Depends only on the coordinates of the bi-window.
    static E2Fn cylinder(C2Ptr m, long l, long i, long lo, long hi, Fn0 table);
    static E2Fn constant(C2Ptr m, const CycNum& c);

    const C2Ptr& model() const { return m_; }
    Tag tag() const { return tag_; }
    long lmax() const { return lmax_; }

    Fn1 at(long l, long i) const;

    E2Fn operator+(const E2Fn& o) const;
    E2Fn operator*(const E2Fn& o) const;
    E2Fn scaled(const CycNum& c) const;
    E2Fn checked() const;

private:
    C2Ptr m_;
    Tag tag_;
    long lmax_;
    Core core_;
};

/// Compactly supported functional on E, available for i >= imin.
class E2Dist {
public:
    enum class Tag { Eprime, Etildeprime };
    using Core = std::function<Dist1(long l, long i)>;

    E2Dist(C2Ptr m, Tag tag, long imin, Core core);

    const C2Ptr& model() const { return m_; }
    Tag tag() const { return tag_; }
    long imin() const { return imin_; }

    Dist1 at(long l, long i) const;

private:
    C2Ptr m_;
    Tag tag_;
    long imin_;
    Core core_;
};

CycNum pair(const E2Fn& f, const E2Dist& g);

// Module structure over E.
D2Elem operator*(const E2Fn& f, const D2Elem& x);
D2Dist operator*(const E2Fn& f, const D2Dist& g);

// Fourier transforms onto the dual model (basepoint o -> -o).
D2Elem fourier2(const D2Elem& x, C2Ptr dual_model = nullptr);
D2Dist fourier2(const D2Dist& g, C2Ptr dual_model = nullptr);
E2Dist fourier2(const E2Fn& f, C2Ptr dual_model = nullptr);
E2Fn fourier2(const E2Dist& g, C2Ptr dual_model = nullptr);

// Representations: R (D), R' (D'), r (E), r' (E').
D2Elem act(const AutHat& g, const D2Elem& x);
D2Dist act(const AutHat& g, const D2Dist& x);
E2Fn act(const AutElem& g, const E2Fn& f);
E2Dist act(const AutElem& g, const E2Dist& x);

/**
 * @brief Admissible triple of two-dimensional models split along inner
 * coordinates: in every slice the sub interval is an initial segment of the
 * mid interval and the quot interval is the rest. All three share shifts.
 */
class TripleC2 {
public:
    TripleC2(C2Ptr sub, C2Ptr mid, C2Ptr quot);
    /// Cut each slice of mid at the cut of the last (from, cut) entry with from <= k_o.
    static TripleC2 split(C2Ptr mid, const std::vector<std::pair<long, long>>& cuts);

    const C2Ptr& sub() const { return sub_; }
    const C2Ptr& mid() const { return mid_; }
    const C2Ptr& quot() const { return quot_; }

    TripleC1 at(long l, long i) const;
    TripleC2 dual() const;
    /// The triple carried by g.
    TripleC2 transformed(const AutElem& g) const;

private:
    C2Ptr sub_, mid_, quot_;
};

// Images. Scalars are the reference coordinates of the consumed measures:
// μ ∈ μ(F1(o)|V1) for β_* and β^* on D', ν ∈ μ(F3(o)|{0}) for α^* and α_* on D'.
D2Elem push_beta(const TripleC2& T, const D2Elem& x, const Rational& mu);   ///< E1 cC2
D2Elem pull_alpha(const TripleC2& T, const D2Elem& x, const Rational& nu);  ///< E3 dC2
D2Elem pull_beta(const TripleC2& T, const D2Elem& y);                       ///< E1 cfC2
D2Elem push_alpha(const TripleC2& T, const D2Elem& x);                      ///< E3 dfC2
D2Dist pull_beta(const TripleC2& T, const D2Dist& h, const Rational& mu);   ///< E1 cC2
D2Dist push_alpha(const TripleC2& T, const D2Dist& g, const Rational& nu);  ///< E3 dC2
D2Dist push_beta(const TripleC2& T, const D2Dist& g);                       ///< E1 cfC2
D2Dist pull_alpha(const TripleC2& T, const D2Dist& g);                      ///< E3 dfC2

// Canonical elements.
D2Dist one_mu(C2Ptr e1, long o, const Rational& mu);   ///< 1_μ, e1 cC2
D2Dist delta_nu(C2Ptr e3, long o, const Rational& nu); ///< δ_ν, e3 dC2
D2Elem one(C2Ptr e1, long o);                          ///< 𝟏, e1 cfC2
D2Elem delta0(C2Ptr e3, long o);                       ///< δ_0, e3 dfC2
/// δ_{E1,μ⊗ν} = α_*(1_μ ⊗ ν).
D2Dist char_dist(const TripleC2& T, long o, const Rational& mu, const Rational& nu);
/// δ_{E1} = α_*(𝟏).
D2Elem char_fn(const TripleC2& T, long o);

struct Compare2Report {
    bool ok = true;
    int windows = 0;
    int skipped = 0;
    std::string first_failure;
    void merge(const Compare2Report& o);
};

/// Compare on every bi-window inside [-range, range] with at most max_points points.
Compare2Report compare2(const D2Dist& a, const D2Dist& b, long range, std::size_t max_points);
Compare2Report compare2(const D2Elem& a, const D2Elem& b, long range, std::size_t max_points);
Compare2Report compare2(const E2Fn& a, const E2Fn& b, long range, std::size_t max_points);
Compare2Report compare2(const E2Dist& a, const E2Dist& b, long range, std::size_t max_points);

enum class PoissonKind { I, II };
/// I: F(δ_{E1,μ⊗ν}) = δ_{Ě3,ν⊗μ}. II: F(δ_{E1}) = δ_{Ě3}.
Compare2Report poisson2_verify(PoissonKind which, const TripleC2& T, long o, const Rational& mu, const Rational& nu,
                               long range, std::size_t max_points);

}  // namespace fh
