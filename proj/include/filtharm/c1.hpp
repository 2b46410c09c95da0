#pragma once
/**
 * @file c1.hpp
 * @brief One-dimensional filtered spaces: integer-indexed models, window
 *        representatives, Haar measures, Fourier transform, and direct and
 *        inverse images along admissible triples.
 *
 * A model is a finite family of "slots". Slot s spans basis vectors e_{(s,k)}
 * for k in [a_s, b_s) (bounds may be infinite), and the filtration is
 * F(i) = span{ e_{(s,k)} : k < i + shift }. For F_q((t)) the vector e_k stands
 * for t^{-1-k}, so F(i) = t^{-i} F_q[[t]].
 */

#include "filtharm/dim0.hpp"

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fh {

/// Stand-in for an infinite slot bound.
inline constexpr long kInf = 1L << 40;

struct Coord {
    long label = 0;
    long k = 0;
    auto operator<=>(const Coord&) const = default;
};
using CoordList = std::vector<Coord>;

struct Slot {
    long label = 0;
    long a = -kInf;
    long b = kInf;
    bool operator==(const Slot&) const = default;
};

class CapabilityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Thrown when an element is asked for a window it cannot be evaluated on.
class Unavailable : public DomainError {
public:
    using DomainError::DomainError;
};

inline long clampl(long x, long a, long b) { return x < a ? a : (x > b ? b : x); }

class C1Model {
public:
    C1Model(FieldPtr f, std::vector<Slot> slots, long shift = 0, std::string name = "");

    /// F_q((t)).
    static C1Model laurent(FieldPtr f);
    /// t^m F_q[[t]]; m = 0 gives F_q[[t]].
    static C1Model lattice(FieldPtr f, long m);
    /// F_q((t)) / t^m F_q[[t]].
    static C1Model quotient(FieldPtr f, long m);

    const FqField& field() const { return *f_; }
    const FieldPtr& field_ptr() const { return f_; }
    int q() const { return f_->q(); }
    const std::vector<Slot>& slots() const { return slots_; }
    long shift() const { return shift_; }
    const std::string& name() const { return name_; }

    /// d(i), normalized so that the coordinates k < 0 form the reference lattice.
    long dim(long i) const;
    CoordList coords(long lo, long hi) const;
    FinSpace window_space(long lo, long hi) const;
    bool contains(const Coord& c) const;

    bool compact() const;
    bool discrete() const;
    bool complete() const { return true; }
    /// Some index with F(i) = 0, when the model is discrete.
    std::optional<long> bottom() const;
    /// Some index with F(i) = V, when the model is compact.
    std::optional<long> top() const;

    C1Model dual() const;
    /// Same filtration with F'(i) = F(i + delta).
    C1Model reindexed(long delta) const;

    bool operator==(const C1Model& o) const { return slots_ == o.slots_ && shift_ == o.shift_; }

private:
    FieldPtr f_;
    std::vector<Slot> slots_;
    long shift_;
    std::string name_;
};

using ModelPtr = std::shared_ptr<const C1Model>;
ModelPtr make_model(C1Model m);

/// Pull back along the coordinate map to-space -> from-space (coordinates of
/// `to` missing from `from` are ignored, coordinates of `from` missing from
/// `to` read as zero).
Fn0 coord_pull(const Fn0& f, const FinSpace& to_space, const CoordList& from, const CoordList& to);
/// Push forward along from-space -> to-space (coordinates of `from` missing
/// from `to` are summed out, coordinates of `to` missing from `from` are zero).
Fn0 coord_push(const Fn0& f, const FinSpace& to_space, const CoordList& from, const CoordList& to);

/// μ(F(i)) = scale · q^{d(i)}.
class Haar {
public:
    Haar(ModelPtr m, Rational scale);
    static Haar with_value(ModelPtr m, long ref, const Rational& value);

    const ModelPtr& model() const { return m_; }
    const Rational& scale() const { return s_; }
    Rational value(long i) const;
    /// The Haar measure on the dual model with F_{μ̌} F_μ = check (scale 1/s).
    Haar dual(ModelPtr dual_model) const;

private:
    ModelPtr m_;
    Rational s_;
};

/// Vector of V: coordinates in window (lo, hi), zero elsewhere.
struct Vec1 {
    long lo = 0;
    long hi = 0;
    std::size_t idx = 0;
};

class Fn1 {
public:
    enum class Tag { D, E, Etilde };
    /// Evaluator of the table at (lo, hi); called only with lo <= inv.
    using Core = std::function<Fn0(long lo, long hi)>;

    Fn1(ModelPtr m, Tag tag, long inv, std::optional<long> supp, Core core);

    /// D function: F(lo)-invariant, supported in F(hi), given by its table there.
    static Fn1 from_window(ModelPtr m, long lo, long hi, Fn0 table);
    /// E function depending only on the coordinates in window (lo, hi).
    static Fn1 cylinder(ModelPtr m, long lo, long hi, Fn0 table);
    static Fn1 constant(ModelPtr m, const CycNum& c);
    static Fn1 indicator(ModelPtr m, long i);  ///< δ_{F(i)}
    /// ψ_a(v) = ψ(a(v)) for a point a of the dual model.
    static Fn1 character(ModelPtr m, const Vec1& a_on_dual);

    const ModelPtr& model() const { return m_; }
    Tag tag() const { return tag_; }
    long inv() const { return inv_; }
    const std::optional<long>& supp() const { return supp_; }

    Fn0 at(long lo, long hi) const;

    Fn1 operator+(const Fn1& o) const;
    Fn1 operator-(const Fn1& o) const;
    Fn1 operator*(const Fn1& o) const;  ///< pointwise
    Fn1 scaled(const CycNum& c) const;
    Fn1 translated(const Vec1& a) const;
    Fn1 checked() const;  ///< f̌(v) = f(-v)
    Fn1 retagged(Tag t) const;
    /// Same function on the reindexed model F'(i) = F(i + delta).
    Fn1 reindexed(long delta) const;

private:
    ModelPtr m_;
    Tag tag_;
    long inv_;
    std::optional<long> supp_;
    Core core_;
};

class Dist1 {
public:
    enum class Tag { Dprime, Eprime, Etildeprime, Haar };
    /// Evaluator valid for lo <= lmax and hi >= hmin; other windows are
    /// obtained from it by the transition maps.
    using Core = std::function<Fn0(long lo, long hi)>;

    Dist1(ModelPtr m, Tag tag, std::optional<long> supp, std::optional<long> lmax, std::optional<long> hmin, Core core);

    /// Given at one window, extended uniformly downward and by zero upward.
    static Dist1 from_window(ModelPtr m, long lo, long hi, Fn0 table);
    static Dist1 haar(const Haar& mu);
    static Dist1 delta0(ModelPtr m);
    /// I_μ(f)(g) = ∫ f g dμ.
    static Dist1 density(const Fn1& f, const Haar& mu);

    const ModelPtr& model() const { return m_; }
    Tag tag() const { return tag_; }
    const std::optional<long>& supp() const { return supp_; }

    /// Pairing table at (lo, hi): G(f) = Σ table · f for f on that window.
    Fn0 at(long lo, long hi) const;
    /// G(f) for f ∈ D, or for f ∈ E when G has compact support.
    CycNum apply(const Fn1& f) const;

    Dist1 operator+(const Dist1& o) const;
    Dist1 operator-(const Dist1& o) const;
    Dist1 scaled(const CycNum& c) const;
    Dist1 translated(const Vec1& a) const;  ///< T_a G (f) = G(T_{-a} f)
    Dist1 checked() const;
    Dist1 times(const Fn1& g) const;  ///< (g·G)(f) = G(g f)
    Dist1 reindexed(long delta) const;

private:
    ModelPtr m_;
    Tag tag_;
    std::optional<long> supp_, lmax_, hmin_;
    Core core_;
};

CycNum integrate(const Fn1& f, const Haar& mu);
Dist1 i_mu(const Fn1& f, const Haar& mu);

/// Translate the vector a into window coordinates of (lo, hi); requires a.hi <= hi.
std::size_t embed_vec(const C1Model& m, const Vec1& a, long lo, long hi);

/// F_μ on D functions; the result lives on the dual model.
Fn1 fourier1(const Fn1& f, const Haar& mu, ModelPtr dual_model = nullptr);
/// F on E functions: Ẽ'-distribution on the dual model, independent of μ.
Dist1 fourier1_e(const Fn1& g, ModelPtr dual_model = nullptr);
/// F_{μ^{-1}} on distributions: F(G)(g) = G(F_μ g) adjointly.
Dist1 fourier1_dist(const Dist1& G, const Haar& mu, ModelPtr dual_model = nullptr);
/// F on compactly supported distributions: an E function on the dual model.
Fn1 fourier1_e_dist(const Dist1& G, ModelPtr dual_model = nullptr);

/**
 * @brief Admissible triple 0 -> sub -> mid -> quot -> 0 split along
 * coordinates: in every slot the sub interval is an initial segment of the
 * mid interval and the quot interval is the rest.
 */
class TripleC1 {
public:
    TripleC1(ModelPtr sub, ModelPtr mid, ModelPtr quot);
    /// Split each slot of mid at cut[s].
    static TripleC1 split(ModelPtr mid, const std::vector<long>& cuts, long sub_shift, long quot_shift);

    const ModelPtr& sub() const { return sub_; }
    const ModelPtr& mid() const { return mid_; }
    const ModelPtr& quot() const { return quot_; }

    /// F_sub(eps(i)) = F_mid(i) ∩ V_sub
    long eps(long i) const { return i + mid_->shift() - sub_->shift(); }
    long eps_inv(long j) const { return j - mid_->shift() + sub_->shift(); }
    /// F_quot(gam(i)) = image of F_mid(i)
    long gam(long i) const { return i + mid_->shift() - quot_->shift(); }
    long gam_inv(long j) const { return j - mid_->shift() + quot_->shift(); }

    /// Smallest-known mid index whose F contains V_sub (sub compact).
    long sub_top() const;
    /// Mid index whose F maps to zero in quot (quot discrete).
    long quot_bottom() const;

    /// Dual triple 0 -> quot^ -> mid^ -> sub^ -> 0.
    TripleC1 dual() const;

private:
    ModelPtr sub_, mid_, quot_;
};

// Images of functions.
Fn1 pull_alpha(const TripleC1& T, const Fn1& f);                  ///< restriction to sub
Fn1 pull_beta(const TripleC1& T, const Fn1& g);                   ///< g ∘ β
Fn1 push_alpha(const TripleC1& T, const Fn1& f);                  ///< extension by zero
Fn1 push_beta(const TripleC1& T, const Fn1& f, const Haar& mu1);  ///< fiber integral
// Images of distributions (adjoints of the above).
Dist1 push_alpha(const TripleC1& T, const Dist1& G);
Dist1 push_beta(const TripleC1& T, const Dist1& G);
Dist1 pull_alpha(const TripleC1& T, const Dist1& G);
Dist1 pull_beta(const TripleC1& T, const Dist1& G, const Haar& mu1);

/// δ_{E1,μ1} = α_*(μ1) on the mid model.
Dist1 char_dist1(const TripleC1& T, const Haar& mu1);

struct Poisson1Report {
    bool ok = true;
    int windows = 0;
    std::string first_failure;
};
/// Compares F_{μ2^{-1}}(δ_{E1,μ1}) with δ_{Ě3, μ1⊗μ2^{-1}} on every dual window
/// with at most `max_points` points inside the index range [-range, range].
Poisson1Report poisson1_verify(const TripleC1& T, const Haar& mu1, const Haar& mu2, std::size_t max_points, long range);

}  // namespace fh
