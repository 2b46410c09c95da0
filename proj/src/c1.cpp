/**
 * @file c1.cpp
 * @brief One-dimensional models, lazy window representatives and images.
 */
#include "filtharm/c1.hpp"

#include <algorithm>
#include <sstream>

namespace fh {

namespace {

long norm_lo(long a) { return a <= -kInf / 2 ? -kInf : a; }
long norm_hi(long b) { return b >= kInf / 2 ? kInf : b; }
bool finite(long x) { return x > -kInf / 2 && x < kInf / 2; }

long pos_in(const CoordList& l, const Coord& c) {
    auto it = std::lower_bound(l.begin(), l.end(), c);
    if (it == l.end() || *it != c) return -1;
    return static_cast<long>(it - l.begin());
}

}  // namespace

// ---------------------------------------------------------------- C1Model

C1Model::C1Model(FieldPtr f, std::vector<Slot> slots, long shift, std::string name)
    : f_(std::move(f)), slots_(std::move(slots)), shift_(shift), name_(std::move(name)) {
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        auto& sl = slots_[s];
        sl.a = norm_lo(sl.a);
        sl.b = norm_hi(sl.b);
        if (sl.b < sl.a) sl.b = sl.a;
        if (s > 0 && slots_[s - 1].label >= sl.label) throw DomainError("C1Model: slot labels must increase");
    }
}

C1Model C1Model::laurent(FieldPtr f) { return {std::move(f), {{0, -kInf, kInf}}, 0, "K"}; }

C1Model C1Model::lattice(FieldPtr f, long m) {
    return {std::move(f), {{0, -kInf, -m}}, 0, m == 0 ? "O" : "t^" + std::to_string(m) + "O"};
}

C1Model C1Model::quotient(FieldPtr f, long m) {
    return {std::move(f), {{0, -m, kInf}}, 0, m == 0 ? "K/O" : "K/t^" + std::to_string(m) + "O"};
}

long C1Model::dim(long i) const {
    long d = 0;
    for (const auto& s : slots_) d += clampl(i + shift_, s.a, s.b) - clampl(0, s.a, s.b);
    return d;
}

CoordList C1Model::coords(long lo, long hi) const {
    if (hi < lo) throw DomainError("C1Model::coords: window with hi < lo");
    CoordList out;
    for (const auto& s : slots_) {
        const long k0 = std::max(lo + shift_, s.a), k1 = std::min(hi + shift_, s.b);
        for (long k = k0; k < k1; ++k) out.push_back({s.label, k});
        if (out.size() > 64) throw Unavailable("window has too many coordinates");
    }
    return out;
}

FinSpace C1Model::window_space(long lo, long hi) const {
    const auto n = coords(lo, hi).size();
    std::size_t sz = 1;
    for (std::size_t i = 0; i < n; ++i) {
        sz *= static_cast<std::size_t>(q());
        if (sz > kTableCap) throw Unavailable("window exceeds the table cap");
    }
    return {f_, static_cast<int>(n)};
}

bool C1Model::contains(const Coord& c) const {
    for (const auto& s : slots_)
        if (s.label == c.label) return c.k >= s.a && c.k < s.b;
    return false;
}

bool C1Model::compact() const {
    return std::all_of(slots_.begin(), slots_.end(), [](const Slot& s) { return s.a == s.b || finite(s.b); });
}

bool C1Model::discrete() const {
    return std::all_of(slots_.begin(), slots_.end(), [](const Slot& s) { return s.a == s.b || finite(s.a); });
}

std::optional<long> C1Model::bottom() const {
    if (!discrete()) return std::nullopt;
    std::optional<long> m;
    for (const auto& s : slots_)
        if (s.a < s.b) m = m ? std::min(*m, s.a) : s.a;
    return m ? *m - shift_ : 0;
}

std::optional<long> C1Model::top() const {
    if (!compact()) return std::nullopt;
    std::optional<long> m;
    for (const auto& s : slots_)
        if (s.a < s.b) m = m ? std::max(*m, s.b) : s.b;
    return m ? *m - shift_ : 0;
}

C1Model C1Model::dual() const {
    std::vector<Slot> ds;
    for (auto it = slots_.rbegin(); it != slots_.rend(); ++it) {
        const long a = it->b >= kInf ? -kInf : -it->b;
        const long b = it->a <= -kInf ? kInf : -it->a;
        ds.push_back({-1 - it->label, a, b});
    }
    std::string n = name_.empty() ? "" : (name_.back() == '^' ? name_.substr(0, name_.size() - 1) : name_ + "^");
    return {f_, ds, -shift_, n};
}

C1Model C1Model::reindexed(long delta) const { return {f_, slots_, shift_ + delta, name_}; }

ModelPtr make_model(C1Model m) { return std::make_shared<const C1Model>(std::move(m)); }

// ---------------------------------------------------------------- coordinate maps

Fn0 coord_pull(const Fn0& f, const FinSpace& to_space, const CoordList& from, const CoordList& to) {
    if (static_cast<int>(from.size()) != f.space().dim() || static_cast<int>(to.size()) != to_space.dim())
        throw DomainError("coord_pull: coordinate list does not match space");
    std::vector<int> sel(from.size());
    for (std::size_t j = 0; j < from.size(); ++j) sel[j] = static_cast<int>(pos_in(to, from[j]));
    return pull0(LinMap::selection(to_space, f.space(), sel), f);
}

Fn0 coord_push(const Fn0& f, const FinSpace& to_space, const CoordList& from, const CoordList& to) {
    if (static_cast<int>(from.size()) != f.space().dim() || static_cast<int>(to.size()) != to_space.dim())
        throw DomainError("coord_push: coordinate list does not match space");
    std::vector<int> sel(to.size());
    for (std::size_t j = 0; j < to.size(); ++j) sel[j] = static_cast<int>(pos_in(from, to[j]));
    return push0(LinMap::selection(f.space(), to_space, sel), f);
}

namespace {

// Table of a function on (lo, hcur) moved to (lo, h): zero extension or restriction.
Fn0 fn_move_hi(const C1Model& m, const Fn0& t, long lo, long hcur, long h) {
    if (h == hcur) return t;
    const auto from = m.coords(lo, hcur), to = m.coords(lo, h);
    if (h > hcur) return coord_push(t, m.window_space(lo, h), from, to);
    return coord_pull(t, m.window_space(lo, h), from, to);
}

// Table of a function on (lcur, h) refined to (lo, h), lo <= lcur: constant along new coordinates.
Fn0 fn_move_lo(const C1Model& m, const Fn0& t, long lcur, long lo, long h) {
    if (lo == lcur) return t;
    return coord_pull(t, m.window_space(lo, h), m.coords(lcur, h), m.coords(lo, h));
}

// Distribution table on a larger window restricted to (lo, hi).
Fn0 dist_restrict(const C1Model& m, const Fn0& t, long l, long h, long lo, long hi) {
    Fn0 r = t;
    if (h != hi) r = coord_pull(r, m.window_space(l, hi), m.coords(l, h), m.coords(l, hi));
    if (l != lo) r = coord_push(r, m.window_space(lo, hi), m.coords(l, hi), m.coords(lo, hi));
    return r;
}

Rational qp(const C1Model& m, long e) { return qpow(m.q(), e); }

}  // namespace

// ---------------------------------------------------------------- Haar

Haar::Haar(ModelPtr m, Rational scale) : m_(std::move(m)), s_(std::move(scale)) {
    if (sgn(s_) == 0) throw DomainError("Haar: zero measure");
}

Haar Haar::with_value(ModelPtr m, long ref, const Rational& value) {
    Rational s = value / qpow(m->q(), m->dim(ref));
    return {std::move(m), s};
}

Rational Haar::value(long i) const { return s_ * qpow(m_->q(), m_->dim(i)); }

Haar Haar::dual(ModelPtr dual_model) const { return {std::move(dual_model), 1 / s_}; }

// ---------------------------------------------------------------- Fn1

Fn1::Fn1(ModelPtr m, Tag tag, long inv, std::optional<long> supp, Core core)
    : m_(std::move(m)), tag_(tag), inv_(inv), supp_(supp), core_(std::move(core)) {
    // An F(inv)-invariant function supported in F(supp) is F(supp)-invariant.
    if (supp_ && inv_ > *supp_) inv_ = *supp_;
}

Fn0 Fn1::at(long lo, long hi) const {
    if (hi < lo) throw DomainError("Fn1::at: hi < lo");
    if (lo > inv_) throw Unavailable("Fn1::at: function is not invariant at this level");
    return core_(lo, hi);
}

Fn1 Fn1::from_window(ModelPtr m, long lo, long hi, Fn0 table) {
    if (table.space() != m->window_space(lo, hi)) throw DomainError("Fn1::from_window: table does not match window");
    const C1Model* mp = m.get();
    return {m, Tag::D, lo, hi, [mp, lo, hi, table](long l, long h) {
                Fn0 t = fn_move_lo(*mp, table, lo, l, hi);
                return fn_move_hi(*mp, t, l, hi, h);
            }};
}

Fn1 Fn1::cylinder(ModelPtr m, long lo, long hi, Fn0 table) {
    if (table.space() != m->window_space(lo, hi)) throw DomainError("Fn1::cylinder: table does not match window");
    const C1Model* mp = m.get();
    std::optional<long> supp;
    if (auto t = m->top()) supp = std::max(*t, lo);
    return {m, Tag::E, lo, supp, [mp, lo, hi, table](long l, long h) {
                return coord_pull(table, mp->window_space(l, h), mp->coords(lo, hi), mp->coords(l, h));
            }};
}

Fn1 Fn1::constant(ModelPtr m, const CycNum& c) {
    FinSpace sp(m->field_ptr(), 0);
    Fn1 f = cylinder(m, 0, 0, Fn0::constant(sp, c));
    f.inv_ = f.supp_ ? *f.supp_ : kInf;
    f.tag_ = Tag::Etilde;
    return f;
}

Fn1 Fn1::indicator(ModelPtr m, long i) {
    FinSpace sp(m->field_ptr(), 0);
    return from_window(m, i, i, Fn0::constant(sp, CycNum(m->field().p(), Rational(1))));
}

Fn1 Fn1::character(ModelPtr m, const Vec1& a) {
    const FqField& f = m->field();
    const long lo = -a.hi, hi = -a.lo;
    FinSpace sp = m->window_space(lo, hi);
    const auto ad = sp.digits(a.idx);
    const int n = sp.dim();
    Fn0 t(sp);
    for (std::size_t x = 0; x < sp.size(); ++x) {
        const auto xd = sp.digits(x);
        int e = 0;
        for (int j = 0; j < n; ++j) e = (e + f.trmul(ad[static_cast<std::size_t>(n - 1 - j)], xd[static_cast<std::size_t>(j)])) % f.p();
        t[x] = CycNum::zeta(f.p(), e);
    }
    Fn1 out = cylinder(m, lo, hi, t);
    out.tag_ = Tag::Etilde;
    return out;
}

Fn1 Fn1::operator+(const Fn1& o) const {
    std::optional<long> s;
    if (supp_ && o.supp_) s = std::max(*supp_, *o.supp_);
    auto a = *this, b = o;
    return {m_, s ? Tag::D : Tag::E, std::min(inv_, o.inv_), s, [a, b](long l, long h) { return a.at(l, h) + b.at(l, h); }};
}

Fn1 Fn1::operator-(const Fn1& o) const { return *this + o.scaled(CycNum(m_->field().p(), Rational(-1))); }

Fn1 Fn1::operator*(const Fn1& o) const {
    std::optional<long> s = supp_;
    if (o.supp_) s = s ? std::min(*s, *o.supp_) : *o.supp_;
    auto a = *this, b = o;
    return {m_, s ? Tag::D : (tag_ == Tag::Etilde && o.tag_ == Tag::Etilde ? Tag::Etilde : Tag::E), std::min(inv_, o.inv_), s,
            [a, b](long l, long h) { return a.at(l, h).hadamard(b.at(l, h)); }};
}

Fn1 Fn1::scaled(const CycNum& c) const {
    auto a = *this;
    return {m_, tag_, inv_, supp_, [a, c](long l, long h) { return a.at(l, h) * c; }};
}

std::size_t embed_vec(const C1Model& m, const Vec1& a, long lo, long hi) {
    if (a.hi > hi) throw DomainError("embed_vec: vector outside window");
    const auto from = m.coords(a.lo, a.hi);
    const auto to = m.coords(lo, hi);
    FinSpace fs = m.window_space(a.lo, a.hi), ts = m.window_space(lo, hi);
    const auto ad = fs.digits(a.idx);
    std::vector<int> td(to.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        const long p = pos_in(to, from[j]);
        if (p >= 0) td[static_cast<std::size_t>(p)] = ad[j];
    }
    return ts.index(td);
}

Fn1 Fn1::translated(const Vec1& a) const {
    auto f = *this;
    std::optional<long> s = supp_;
    if (s) s = std::max(*s, a.hi);
    const C1Model* mp = m_.get();
    return {m_, tag_, inv_, s, [f, a, mp](long l, long h) {
                const long h2 = std::max(h, a.hi);
                Fn0 t = translate0(f.at(l, h2), embed_vec(*mp, a, l, h2));
                return fn_move_hi(*mp, t, l, h2, h);
            }};
}

Fn1 Fn1::checked() const {
    auto f = *this;
    return {m_, tag_, inv_, supp_, [f](long l, long h) { return check0(f.at(l, h)); }};
}

Fn1 Fn1::retagged(Tag t) const {
    Fn1 f = *this;
    f.tag_ = t;
    return f;
}

Fn1 Fn1::reindexed(long delta) const {
    auto f = *this;
    auto m2 = make_model(m_->reindexed(delta));
    std::optional<long> s;
    if (supp_) s = *supp_ - delta;
    return {m2, tag_, inv_ >= kInf / 2 ? inv_ : inv_ - delta, s, [f, delta](long l, long h) { return f.at(l + delta, h + delta); }};
}

// ---------------------------------------------------------------- Dist1

Dist1::Dist1(ModelPtr m, Tag tag, std::optional<long> supp, std::optional<long> lmax, std::optional<long> hmin, Core core)
    : m_(std::move(m)), tag_(tag), supp_(supp), lmax_(lmax), hmin_(hmin), core_(std::move(core)) {}

Fn0 Dist1::at(long lo, long hi) const {
    if (hi < lo) throw DomainError("Dist1::at: hi < lo");
    long l = lmax_ ? std::min(lo, *lmax_) : lo;
    long h = hmin_ ? std::max(hi, *hmin_) : hi;
    if (h < l) h = l;
    Fn0 t = core_(l, h);
    if (l == lo && h == hi) return t;
    return dist_restrict(*m_, t, l, h, lo, hi);
}

Dist1 Dist1::from_window(ModelPtr m, long lo, long hi, Fn0 table) {
    if (table.space() != m->window_space(lo, hi)) throw DomainError("Dist1::from_window: table does not match window");
    const C1Model* mp = m.get();
    return {m, Tag::Dprime, hi, lo, hi, [mp, lo, hi, table](long l, long h) {
                Fn0 t = fn_move_lo(*mp, table, lo, l, hi) * qp(*mp, mp->dim(l) - mp->dim(lo));
                return fn_move_hi(*mp, t, l, hi, h);
            }};
}

Dist1 Dist1::haar(const Haar& mu) {
    const ModelPtr& m = mu.model();
    const C1Model* mp = m.get();
    const int p = m->field().p();
    return {m, Tag::Haar, m->top(), std::nullopt, std::nullopt, [mp, mu, p](long l, long h) {
                return Fn0::constant(mp->window_space(l, h), CycNum(p, mu.value(l)));
            }};
}

Dist1 Dist1::delta0(ModelPtr m) {
    const C1Model* mp = m.get();
    return {m, Tag::Eprime, -kInf, std::nullopt, std::nullopt,
            [mp](long l, long h) { return Fn0::delta(mp->window_space(l, h), 0); }};
}

Dist1 Dist1::density(const Fn1& f, const Haar& mu) {
    std::optional<long> lmax;
    if (f.inv() < kInf / 2) lmax = f.inv();
    return {f.model(), f.supp() ? Tag::Eprime : Tag::Dprime, f.supp(), lmax, std::nullopt,
            [f, mu](long l, long h) { return f.at(l, h) * mu.value(l); }};
}

CycNum Dist1::apply(const Fn1& f) const {
    long lo, hi;
    if (f.supp()) {
        hi = *f.supp();
        lo = std::min(f.inv(), hi);
    } else if (supp_) {
        hi = std::max(*supp_, std::min(f.inv(), 0L));
        lo = std::min(f.inv(), hi);
    } else {
        throw CapabilityError("Dist1::apply: neither the function nor the distribution has compact support");
    }
    return pairing0(at(lo, hi), f.at(lo, hi));
}

Dist1 Dist1::operator+(const Dist1& o) const {
    std::optional<long> s;
    if (supp_ && o.supp_) s = std::max(*supp_, *o.supp_);
    auto a = *this, b = o;
    return {m_, tag_ == o.tag_ ? tag_ : Tag::Dprime, s, std::nullopt, std::nullopt,
            [a, b](long l, long h) { return a.at(l, h) + b.at(l, h); }};
}

Dist1 Dist1::operator-(const Dist1& o) const { return *this + o.scaled(CycNum(m_->field().p(), Rational(-1))); }

Dist1 Dist1::scaled(const CycNum& c) const {
    auto a = *this;
    return {m_, tag_, supp_, std::nullopt, std::nullopt, [a, c](long l, long h) { return a.at(l, h) * c; }};
}

Dist1 Dist1::translated(const Vec1& v) const {
    auto a = *this;
    std::optional<long> s = supp_;
    if (s) s = std::max(*s, v.hi);
    const C1Model* mp = m_.get();
    return {m_, tag_, s, std::nullopt, v.hi, [a, v, mp](long l, long h) {
                return translate0(a.at(l, h), embed_vec(*mp, v, l, h));
            }};
}

Dist1 Dist1::checked() const {
    auto a = *this;
    return {m_, tag_, supp_, std::nullopt, std::nullopt, [a](long l, long h) { return check0(a.at(l, h)); }};
}

Dist1 Dist1::times(const Fn1& g) const {
    auto a = *this;
    std::optional<long> s = supp_;
    if (g.supp()) s = s ? std::min(*s, *g.supp()) : *g.supp();
    std::optional<long> lmax;
    if (g.inv() < kInf / 2) lmax = g.inv();
    return {m_, tag_, s, lmax, std::nullopt, [a, g](long l, long h) { return a.at(l, h).hadamard(g.at(l, h)); }};
}

Dist1 Dist1::reindexed(long delta) const {
    auto a = *this;
    auto m2 = make_model(m_->reindexed(delta));
    std::optional<long> s;
    if (supp_) s = *supp_ <= -kInf / 2 ? *supp_ : *supp_ - delta;
    return {m2, tag_, s, std::nullopt, std::nullopt, [a, delta](long l, long h) { return a.at(l + delta, h + delta); }};
}

CycNum integrate(const Fn1& f, const Haar& mu) {
    if (!f.supp()) throw CapabilityError("integrate: function without compact support");
    const long hi = *f.supp(), lo = std::min(f.inv(), hi);
    const Fn0 t = f.at(lo, hi);
    CycNum s(f.model()->field().p());
    for (std::size_t i = 0; i < t.size(); ++i) s += t[i];
    return s * mu.value(lo);
}

Dist1 i_mu(const Fn1& f, const Haar& mu) { return Dist1::density(f, mu); }

// ---------------------------------------------------------------- Fourier

namespace {
ModelPtr dual_of(const C1Model& m, ModelPtr given) { return given ? given : make_model(m.dual()); }
}  // namespace

Fn1 fourier1(const Fn1& f, const Haar& mu, ModelPtr dm) {
    if (!f.supp()) throw CapabilityError("fourier1: D function expected");
    dm = dual_of(*f.model(), dm);
    const C1Model* dp = dm.get();
    const long inv = f.inv();
    std::optional<long> supp;
    if (inv < kInf / 2) supp = -inv;
    return {dm, Fn1::Tag::D, -*f.supp(), supp, [f, mu, dp, inv](long L, long H) {
                const long H2 = inv < kInf / 2 ? std::max(H, -inv) : H;
                const long lo = -H2, hi = -L;
                Fn0 r = reverse_digits(fourier0(f.at(lo, hi))) * mu.value(lo);
                Fn0 t(dp->window_space(L, H2), r.table());
                return fn_move_hi(*dp, t, L, H2, H);
            }};
}

Dist1 fourier1_e(const Fn1& g, ModelPtr dm) {
    dm = dual_of(*g.model(), dm);
    const C1Model* dp = dm.get();
    const C1Model* mp = g.model().get();
    std::optional<long> hmin, supp;
    if (g.inv() < kInf / 2) {
        hmin = -g.inv();
        supp = -g.inv();
    } else {
        supp = -kInf;
    }
    return {dm, Dist1::Tag::Etildeprime, supp, std::nullopt, hmin, [g, dp, mp](long L, long H) {
                const long lo = -H, hi = -L;
                Fn0 r = reverse_digits(fourier0(g.at(lo, hi))) * qpow(mp->q(), mp->dim(lo) - mp->dim(hi));
                return Fn0(dp->window_space(L, H), r.table());
            }};
}

Dist1 fourier1_dist(const Dist1& G, const Haar& mu, ModelPtr dm) {
    dm = dual_of(*G.model(), dm);
    const C1Model* dp = dm.get();
    return {dm, Dist1::Tag::Dprime, std::nullopt, std::nullopt, std::nullopt, [G, mu, dp](long L, long H) {
                const long lo = -H, hi = -L;
                Fn0 r = reverse_digits(fourier0(G.at(lo, hi))) * (1 / mu.value(hi));
                return Fn0(dp->window_space(L, H), r.table());
            }};
}

Fn1 fourier1_e_dist(const Dist1& G, ModelPtr dm) {
    if (!G.supp()) throw CapabilityError("fourier1_e_dist: distribution without compact support");
    dm = dual_of(*G.model(), dm);
    const C1Model* dp = dm.get();
    const long s = *G.supp();
    const long inv = s <= -kInf / 2 ? kInf : -s;
    return {dm, Fn1::Tag::E, inv, std::nullopt, [G, dp](long L, long H) {
                Fn0 r = reverse_digits(fourier0(G.at(-H, -L)));
                return Fn0(dp->window_space(L, H), r.table());
            }};
}

// ---------------------------------------------------------------- triples

TripleC1::TripleC1(ModelPtr sub, ModelPtr mid, ModelPtr quot) : sub_(std::move(sub)), mid_(std::move(mid)), quot_(std::move(quot)) {
    // A slot missing from sub or quot counts as empty there.
    auto find = [](const std::vector<Slot>& v, long label) -> std::optional<Slot> {
        for (const auto& s : v)
            if (s.label == label) return s;
        return std::nullopt;
    };
    auto covered = [&](const std::vector<Slot>& v) {
        for (const auto& s : v)
            if (s.a < s.b && !find(mid_->slots(), s.label)) throw DomainError("TripleC1: slot absent from mid");
    };
    covered(sub_->slots());
    covered(quot_->slots());
    for (const auto& m : mid_->slots()) {
        const auto s1 = find(sub_->slots(), m.label), s3 = find(quot_->slots(), m.label);
        const bool sub_empty = !s1 || s1->a == s1->b, quot_empty = !s3 || s3->a == s3->b;
        bool ok;
        if (sub_empty && quot_empty) ok = m.a == m.b;
        else if (sub_empty) ok = s3->a == m.a && s3->b == m.b;
        else if (quot_empty) ok = s1->a == m.a && s1->b == m.b;
        else ok = s1->a == m.a && s3->a == s1->b && s3->b == m.b;
        if (!ok) throw DomainError("TripleC1: sub must be an initial segment of each slot and quot the rest");
    }
}

TripleC1 TripleC1::split(ModelPtr mid, const std::vector<long>& cuts, long sub_shift, long quot_shift) {
    const auto& ms = mid->slots();
    if (cuts.size() != ms.size()) throw DomainError("TripleC1::split: one cut per slot expected");
    std::vector<Slot> s1, s3;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const long c = clampl(cuts[i], ms[i].a, ms[i].b);
        s1.push_back({ms[i].label, ms[i].a, c});
        s3.push_back({ms[i].label, c, ms[i].b});
    }
    auto sub = make_model(C1Model(mid->field_ptr(), s1, sub_shift, mid->name() + ".sub"));
    auto quot = make_model(C1Model(mid->field_ptr(), s3, quot_shift, mid->name() + ".quot"));
    return {sub, std::move(mid), quot};
}

long TripleC1::sub_top() const {
    auto t = sub_->top();
    if (!t) throw CapabilityError("TripleC1: sub is not compact");
    return eps_inv(*t);
}

long TripleC1::quot_bottom() const {
    auto b = quot_->bottom();
    if (!b) throw CapabilityError("TripleC1: quot is not discrete");
    return gam_inv(*b);
}

TripleC1 TripleC1::dual() const {
    return {make_model(quot_->dual()), make_model(mid_->dual()), make_model(sub_->dual())};
}

// ---------------------------------------------------------------- images of functions

Fn1 pull_alpha(const TripleC1& T, const Fn1& f) {
    std::optional<long> s;
    if (f.supp()) s = T.eps(*f.supp());
    const long inv = f.inv() < kInf / 2 ? T.eps(f.inv()) : kInf;
    return {T.sub(), f.tag(), inv, s, [T, f](long l, long h) {
                const long l2 = T.eps_inv(l), h2 = T.eps_inv(h);
                return coord_pull(f.at(l2, h2), T.sub()->window_space(l, h), T.mid()->coords(l2, h2), T.sub()->coords(l, h));
            }};
}

Fn1 pull_beta(const TripleC1& T, const Fn1& g) {
    // With a noncompact sub the pullback of a D function is only locally constant.
    const bool compact = T.sub()->compact();
    std::optional<long> s;
    if (g.supp() && compact) s = std::max(T.gam_inv(*g.supp()), T.sub_top());
    const long inv = g.inv() < kInf / 2 ? T.gam_inv(g.inv()) : kInf;
    const Fn1::Tag tag = s ? Fn1::Tag::D : (g.tag() == Fn1::Tag::D ? Fn1::Tag::E : g.tag());
    return {T.mid(), tag, inv, s, [T, g](long l, long h) {
                const long l3 = T.gam(l), h3 = T.gam(h);
                return coord_pull(g.at(l3, h3), T.mid()->window_space(l, h), T.quot()->coords(l3, h3), T.mid()->coords(l, h));
            }};
}

Fn1 push_alpha(const TripleC1& T, const Fn1& f) {
    if (!T.quot()->discrete()) throw CapabilityError("push_alpha on functions requires a discrete quot");
    std::optional<long> s;
    if (f.supp()) s = T.eps_inv(*f.supp());
    const long inv = std::min(f.inv() < kInf / 2 ? T.eps_inv(f.inv()) : kInf, T.quot_bottom());
    return {T.mid(), f.tag(), inv, s, [T, f](long l, long h) {
                const long l1 = T.eps(l), h1 = T.eps(h);
                return coord_push(f.at(l1, h1), T.mid()->window_space(l, h), T.sub()->coords(l1, h1), T.mid()->coords(l, h));
            }};
}

Fn1 push_beta(const TripleC1& T, const Fn1& f, const Haar& mu1) {
    if (!f.supp() && !T.sub()->compact()) throw CapabilityError("push_beta on E requires a compact sub");
    std::optional<long> s;
    if (f.supp()) s = T.gam(*f.supp());
    const long inv = f.inv() < kInf / 2 ? T.gam(f.inv()) : kInf;
    const long need = f.supp() ? *f.supp() : T.sub_top();
    return {T.quot(), f.tag(), inv, s, [T, f, mu1, need](long l3, long h3) {
                const long l2 = T.gam_inv(l3), h2 = std::max(T.gam_inv(h3), need);
                const long h3b = T.gam(h2);
                Fn0 r = coord_push(f.at(l2, h2), T.quot()->window_space(l3, h3b), T.mid()->coords(l2, h2), T.quot()->coords(l3, h3b));
                r *= mu1.value(T.eps(l2));
                return fn_move_hi(*T.quot(), r, l3, h3b, h3);
            }};
}

// ---------------------------------------------------------------- images of distributions

Dist1 push_alpha(const TripleC1& T, const Dist1& G) {
    std::optional<long> s;
    if (G.supp()) s = *G.supp() <= -kInf / 2 ? *G.supp() : T.eps_inv(*G.supp());
    return {T.mid(), G.tag(), s, std::nullopt, std::nullopt, [T, G](long l, long h) {
                const long l1 = T.eps(l), h1 = T.eps(h);
                return coord_push(G.at(l1, h1), T.mid()->window_space(l, h), T.sub()->coords(l1, h1), T.mid()->coords(l, h));
            }};
}

Dist1 pull_beta(const TripleC1& T, const Dist1& G, const Haar& mu1) {
    std::optional<long> s;
    if (G.supp() && T.sub()->compact()) s = std::max(*G.supp() <= -kInf / 2 ? -kInf : T.gam_inv(*G.supp()), T.sub_top());
    return {T.mid(), G.tag(), s, std::nullopt, std::nullopt, [T, G, mu1](long l, long h) {
                const long l3 = T.gam(l), h3 = T.gam(h);
                Fn0 r = coord_pull(G.at(l3, h3), T.mid()->window_space(l, h), T.quot()->coords(l3, h3), T.mid()->coords(l, h));
                return r * mu1.value(T.eps(l));
            }};
}

Dist1 push_beta(const TripleC1& T, const Dist1& G) {
    // A compactly supported G only sees the part of the fibers inside its support.
    const bool bounded = G.supp() && *G.supp() > -kInf / 2;
    if (!T.sub()->compact() && !G.supp()) throw CapabilityError("push_beta on distributions requires a compact sub or compact support");
    std::optional<long> s;
    if (G.supp()) s = *G.supp() <= -kInf / 2 ? *G.supp() : T.gam(*G.supp());
    const long top = T.sub()->compact() ? T.sub_top() : (bounded ? *G.supp() : -kInf);
    return {T.quot(), G.tag(), s, std::nullopt, std::nullopt, [T, G, top](long l3, long h3) {
                const long l2 = T.gam_inv(l3), h2 = std::max(T.gam_inv(h3), top);
                const long h3b = T.gam(h2);
                Fn0 r = coord_push(G.at(l2, h2), T.quot()->window_space(l3, h3b), T.mid()->coords(l2, h2), T.quot()->coords(l3, h3b));
                if (h3b == h3) return r;
                return coord_pull(r, T.quot()->window_space(l3, h3), T.quot()->coords(l3, h3b), T.quot()->coords(l3, h3));
            }};
}

Dist1 pull_alpha(const TripleC1& T, const Dist1& G) {
    if (!T.quot()->discrete()) throw CapabilityError("pull_alpha on distributions requires a discrete quot");
    std::optional<long> s;
    if (G.supp()) s = *G.supp() <= -kInf / 2 ? *G.supp() : T.eps(*G.supp());
    const long bot = T.quot_bottom();
    return {T.sub(), G.tag(), s, std::nullopt, std::nullopt, [T, G, bot](long l1, long h1) {
                const long l2 = std::min(T.eps_inv(l1), bot), h2 = T.eps_inv(h1);
                const long l1b = T.eps(l2);
                const C1Model& S = *T.sub();
                Fn0 r = coord_pull(G.at(l2, h2), S.window_space(l1b, h1), T.mid()->coords(l2, h2), S.coords(l1b, h1));
                if (l1b == l1) return r;
                return coord_push(r, S.window_space(l1, h1), S.coords(l1b, h1), S.coords(l1, h1));
            }};
}

Dist1 char_dist1(const TripleC1& T, const Haar& mu1) { return push_alpha(T, Dist1::haar(mu1)); }

Poisson1Report poisson1_verify(const TripleC1& T, const Haar& mu1, const Haar& mu2, std::size_t max_points, long range) {
    Poisson1Report rep;
    const TripleC1 D = T.dual();
    const Dist1 lhs = fourier1_dist(char_dist1(T, mu1), mu2, D.mid());
    const Haar mu3c(D.sub(), mu1.scale() / mu2.scale());
    const Dist1 rhs = char_dist1(D, mu3c);
    const C1Model& M = *D.mid();
    for (long L = -range; L <= range; ++L)
        for (long H = L; H <= range; ++H) {
            const long n = M.dim(H) - M.dim(L);
            std::size_t pts = 1;
            bool big = false;
            for (long i = 0; i < n; ++i) {
                pts *= static_cast<std::size_t>(M.q());
                if (pts > max_points) big = true;
            }
            if (big) continue;
            ++rep.windows;
            if (lhs.at(L, H) != rhs.at(L, H) && rep.ok) {
                rep.ok = false;
                std::ostringstream os;
                os << "window (" << L << "," << H << ")";
                rep.first_failure = os.str();
            }
        }
    return rep;
}

}  // namespace fh
