/**
 * @file c2.cpp
 * @brief Two-dimensional models and lazy families of window elements.
 */
#include "filtharm/c2.hpp"

#include <algorithm>
#include <sstream>

namespace fh {

namespace {

long norm_lo(long a) { return a <= -kInf / 2 ? -kInf : a; }
long norm_hi(long b) { return b >= kInf / 2 ? kInf : b; }
bool finite(long x) { return x > -kInf / 2 && x < kInf / 2; }
bool empty(const Piece& p) { return p.a >= p.b; }
long neg_index(long x) { return finite(x) ? -x : (x > 0 ? -kInf : kInf); }

std::string toggle_dual(const std::string& n) {
    if (n.empty()) return n;
    return n.back() == '^' ? n.substr(0, n.size() - 1) : n + "^";
}

Rational qp(int q, long e) { return qpow(q, e); }

CycNum cyc(const C2Model& m, const Rational& r) { return CycNum(m.field().p(), r); }

// Table relabeled onto a window of the same shape: out[v] = s · t[c^{-1} v].
Fn0 relabel(const Fn0& t, const FinSpace& target, int cinv, const Rational& s) {
    if (target.dim() != t.space().dim()) throw DomainError("relabel: window shapes differ");
    std::vector<CycNum> out(t.size());
    for (std::size_t v = 0; v < t.size(); ++v) out[v] = t[t.space().scale(cinv, v)] * s;
    return {target, std::move(out)};
}

long shift_opt(long x, long d) { return finite(x) ? x - d : x; }

// f moved onto `target`, whose inner index n corresponds to n + db of f.
Fn1 rehome(const Fn1& f, ModelPtr target, long db, int cinv, const Rational& s) {
    std::optional<long> supp;
    if (f.supp()) supp = *f.supp() - db;
    const C1Model* tp = target.get();
    return {target, f.tag(), shift_opt(f.inv(), db), supp, [f, tp, db, cinv, s](long m, long n) {
                return relabel(f.at(m + db, n + db), tp->window_space(m, n), cinv, s);
            }};
}

Dist1 rehome(const Dist1& g, ModelPtr target, long db, int cinv, const Rational& s) {
    std::optional<long> supp;
    if (g.supp()) supp = shift_opt(*g.supp(), db);
    const C1Model* tp = target.get();
    return {target, g.tag(), supp, std::nullopt, std::nullopt, [g, tp, db, cinv, s](long m, long n) {
                return relabel(g.at(m + db, n + db), tp->window_space(m, n), cinv, s);
            }};
}

void same_model(const C2Model& a, const C2Model& b, const char* what) {
    if (!(a == b)) throw DomainError(std::string(what) + ": elements live on different models");
}

std::string win(long l, long i, long m, long n) {
    std::ostringstream os;
    os << "bi-window (" << l << "," << i << ")x(" << m << "," << n << ")";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- C2Model

C2Model::C2Model(FieldPtr f, std::vector<Piece> pieces, long outer_shift, long inner_shift, std::string name)
    : f_(std::move(f)), S_(outer_shift), s_(inner_shift), name_(std::move(name)) {
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.from < y.from; });
    if (pieces.empty() || pieces.front().from > -kInf / 2) pieces.insert(pieces.begin(), Piece{-kInf, 0, 0});
    for (auto& p : pieces) {
        p.from = norm_lo(p.from);
        p.a = norm_lo(p.a);
        p.b = norm_hi(p.b);
        if (p.b <= p.a) p.a = p.b = 0;
    }
    for (auto& p : pieces) {
        if (!pieces_.empty() && pieces_.back().from == p.from) pieces_.pop_back();
        if (!pieces_.empty() && pieces_.back().a == p.a && pieces_.back().b == p.b) continue;
        pieces_.push_back(p);
    }
    pieces_.front().from = -kInf;
}

C2Model C2Model::k2(FieldPtr f) { return {std::move(f), {{-kInf, -kInf, kInf}}, 0, 0, "K2"}; }

C2Model C2Model::outer_lattice(FieldPtr f, long m) {
    return {std::move(f), {{-kInf, -kInf, kInf}, {-m, 0, 0}}, 0, 0, "t^" + std::to_string(m) + "K[[t]]"};
}

C2Model C2Model::outer_quotient(FieldPtr f, long m) {
    return {std::move(f), {{-kInf, 0, 0}, {-m, -kInf, kInf}}, 0, 0, "K2/t^" + std::to_string(m) + "K[[t]]"};
}

C2Model C2Model::inner_lattice(FieldPtr f, long m) {
    return {std::move(f), {{-kInf, -kInf, -m}}, 0, 0, "u^" + std::to_string(m) + "O((t))"};
}

C2Model C2Model::inner_quotient(FieldPtr f, long m) {
    return {std::move(f), {{-kInf, -m, kInf}}, 0, 0, "K2/u^" + std::to_string(m) + "O((t))"};
}

Slot C2Model::slice(long ko) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), ko, [](long k, const Piece& p) { return k < p.from; });
    --it;
    return {ko, it->a, it->b};
}

ModelPtr C2Model::inner(long l, long i) const {
    if (i < l) throw DomainError("C2Model::inner: window with i < l");
    if (i - l > 256) throw Unavailable("C2Model::inner: outer window too wide");
    std::vector<Slot> slots;
    for (long k = l + S_; k < i + S_; ++k) {
        Slot sl = slice(k);
        if (sl.a < sl.b) slots.push_back(sl);
    }
    return make_model(C1Model(f_, std::move(slots), s_, name_ + "[" + std::to_string(l) + "," + std::to_string(i) + ")"));
}

long C2Model::biwindow_dim(long l, long i, long m, long n) const {
    long d = 0;
    for (long k = l + S_; k < i + S_; ++k) {
        const Slot sl = slice(k);
        d += std::max(0L, std::min(n + s_, sl.b) - std::max(m + s_, sl.a));
    }
    return d;
}

bool C2Model::cC2() const { return empty(pieces_.back()); }
bool C2Model::dC2() const { return empty(pieces_.front()); }

bool C2Model::cfC2() const {
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return empty(p) || finite(p.b); });
}

bool C2Model::dfC2() const {
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return empty(p) || finite(p.a); });
}

std::optional<long> C2Model::top() const {
    if (!cC2()) return std::nullopt;
    std::size_t j = pieces_.size() - 1;
    while (j > 0 && empty(pieces_[j - 1])) --j;
    return j == 0 ? 0 : pieces_[j].from - S_;
}

std::optional<long> C2Model::bottom() const {
    if (!dC2()) return std::nullopt;
    for (const auto& p : pieces_)
        if (!empty(p)) return p.from - S_;
    return 0;
}

C2Model C2Model::dual() const {
    std::vector<Piece> out;
    for (std::size_t j = pieces_.size(); j-- > 0;) {
        const Piece& p = pieces_[j];
        const long from = j + 1 < pieces_.size() ? -pieces_[j + 1].from : -kInf;
        if (empty(p)) out.push_back({from, 0, 0});
        else out.push_back({from, p.b >= kInf ? -kInf : -p.b, p.a <= -kInf ? kInf : -p.a});
    }
    return {f_, out, -S_, -s_, toggle_dual(name_)};
}

C2Model C2Model::transformed(long a, long b) const {
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
        if (empty(p)) out.push_back({shift_opt(p.from, a), 0, 0});
        else out.push_back({shift_opt(p.from, a), shift_opt(p.a, b), shift_opt(p.b, b)});
    }
    std::string n = name_;
    if (a != 0 || b != 0) n = "t^" + std::to_string(a) + "u^" + std::to_string(b) + "." + n;
    return {f_, out, S_, s_, n};
}

C2Model C2Model::reindexed(long da, long db) const { return {f_, pieces_, S_ + da, s_ + db, name_}; }

C2Ptr make_model(C2Model m) { return std::make_shared<const C2Model>(std::move(m)); }

long lattice_shift_sum(const C2Model& m, long b, long from, long to) {
    if (from > to) return -lattice_shift_sum(m, b, to, from);
    long sum = 0;
    for (long k = from + m.outer_shift(); k < to + m.outer_shift(); ++k) {
        const Slot sl = m.slice(k);
        if (sl.a < sl.b) sum += clampl(b, sl.a, sl.b) - clampl(0, sl.a, sl.b);
    }
    return sum;
}

// ---------------------------------------------------------------- virtual measures

VirtualMeasure::VirtualMeasure(C2Ptr m, long from, long to, Rational unit, long exp)
    : m_(std::move(m)), from_(from), to_(to), unit_(std::move(unit)), exp_(exp) {
    if (sgn(unit_) == 0) throw DomainError("VirtualMeasure: zero scalar");
}

VirtualMeasure VirtualMeasure::canonical(C2Ptr m, long i, long j, Kind kind) {
    if (kind == Kind::One && !m->cfC2()) throw CapabilityError("canonical 1 requires a cfC2 model");
    if (kind == Kind::Delta && !m->dfC2()) throw CapabilityError("canonical delta requires a dfC2 model");
    const long lo = std::min(i, j), hi = std::max(i, j);
    long e = 0;
    for (long k = lo + m->outer_shift(); k < hi + m->outer_shift(); ++k) {
        const Slot sl = m->slice(k);
        if (sl.a >= sl.b) continue;
        const long edge = kind == Kind::One ? sl.b : sl.a;
        e -= edge - clampl(0, sl.a, sl.b);
    }
    return {std::move(m), i, j, 1, i <= j ? e : -e};
}

Rational VirtualMeasure::scalar() const { return unit_ * qp(m_->q(), exp_); }

VirtualMeasure VirtualMeasure::compose(const VirtualMeasure& o) const {
    same_model(*m_, *o.m_, "VirtualMeasure::compose");
    if (to_ != o.from_) throw DomainError("VirtualMeasure::compose: index mismatch");
    return {m_, from_, o.to_, unit_ * o.unit_, exp_ + o.exp_};
}

VirtualMeasure VirtualMeasure::inverse() const { return {m_, to_, from_, 1 / unit_, -exp_}; }

VirtualMeasure VirtualMeasure::dual(C2Ptr dm) const { return {std::move(dm), -from_, -to_, unit_, exp_}; }

bool VirtualMeasure::operator==(const VirtualMeasure& o) const {
    return *m_ == *o.m_ && from_ == o.from_ && to_ == o.to_ && scalar() == o.scalar();
}

// ---------------------------------------------------------------- automorphisms

AutElem::AutElem(long a, long b, FqElem c) : a_(a), b_(b), c_(std::move(c)) {
    if (c_.is_zero()) throw DomainError("AutElem: zero unit");
}

AutElem AutElem::operator*(const AutElem& o) const { return {a_ + o.a_, b_ + o.b_, c_ * o.c_}; }

AutElem AutElem::inverse() const { return {-a_, -b_, c_.inv()}; }

long AutElem::transport_exponent(const C2Model& m, long p, long q) const { return lattice_shift_sum(m, b_, p, q); }

AutHat::AutHat(C2Ptr m, long o, AutElem g, Rational unit, long exp)
    : m_(std::move(m)), o_(o), g_(std::move(g)), mu_(m_, o, o - g_.a(), std::move(unit), exp) {
    if (!(g_.apply(*m_) == *m_)) throw DomainError("AutHat: automorphism does not preserve the model");
}

AutHat AutHat::identity(C2Ptr m, long o) {
    auto f = m->field_ptr();
    return {std::move(m), o, AutElem::identity(f)};
}

AutHat AutHat::operator*(const AutHat& o) const {
    same_model(*m_, *o.m_, "AutHat::operator*");
    if (o_ != o.o_) throw DomainError("AutHat: mismatched basepoints");
    const long e = g_.transport_exponent(*m_, o_, o_ - o.g_.a());
    const VirtualMeasure moved(m_, o_ - g_.a(), o_ - g_.a() - o.g_.a(), o.mu_.unit(), o.mu_.exponent() + e);
    const VirtualMeasure prod = mu_.compose(moved);
    return {m_, o_, g_ * o.g_, prod.unit(), prod.exponent()};
}

AutHat AutHat::inverse() const {
    const AutElem gi = g_.inverse();
    const long e = gi.transport_exponent(*m_, o_ - g_.a(), o_);
    return {m_, o_, gi, 1 / mu_.unit(), -mu_.exponent() + e};
}

AutHat AutHat::dual(C2Ptr dm) const { return {std::move(dm), -o_, g_.dual_inverse(), mu_.unit(), mu_.exponent()}; }

// ---------------------------------------------------------------- D2Elem

D2Elem::D2Elem(C2Ptr m, long o, long lmax, long imin, Core core)
    : m_(std::move(m)), o_(o), lmax_(lmax), imin_(imin), core_(std::move(core)) {}

Fn1 D2Elem::at(long l, long i) const {
    if (i < l) throw DomainError("D2Elem::at: window with i < l");
    const long l2 = std::min(l, lmax_), i2 = std::max(i, imin_);
    Fn1 x = core_(l2, i2);
    if (i2 != i) x = pull_alpha(TripleC1(m_->inner(l2, i), m_->inner(l2, i2), m_->inner(i, i2)), x);
    if (l2 != l) {
        TripleC1 T(m_->inner(l2, l), m_->inner(l2, i), m_->inner(l, i));
        x = push_beta(T, x, Haar(T.sub(), 1));
    }
    return x;
}

D2Elem D2Elem::from_biwindow(C2Ptr m, long o, long l0, long i0, long lo, long hi, Fn0 table) {
    if (hi < lo) throw DomainError("D2Elem::from_biwindow: inner window with hi < lo");
    const ModelPtr w0 = m->inner(l0, i0);
    const Fn1 base = Fn1::from_window(w0, lo, hi, std::move(table));
    const C2Model* mp = m.get();
    auto core = [mp, w0, base, l0, i0, lo, hi](long l, long i) -> Fn1 {
        const ModelPtr w = mp->inner(l, i);
        const Rational sc = qp(mp->q(), -mp->inner(l, l0)->dim(lo));
        const long kmin = l0 + mp->outer_shift(), kmax = i0 + mp->outer_shift(), kcut = lo + mp->inner_shift();
        const C1Model* wp = w.get();
        return {w, Fn1::Tag::D, lo, hi, [wp, w0, base, sc, kmin, kmax, kcut](long m, long n) {
                    const FinSpace sp = wp->window_space(m, n);
                    const CoordList cw = wp->coords(m, n);
                    Fn0 t = coord_pull(base.at(m, n), sp, w0->coords(m, n), cw);
                    std::vector<std::size_t> outside;
                    for (std::size_t j = 0; j < cw.size(); ++j)
                        if ((cw[j].label < kmin || cw[j].label >= kmax) && cw[j].k >= kcut) outside.push_back(j);
                    for (std::size_t x = 0; x < sp.size(); ++x) {
                        if (!outside.empty()) {
                            const auto d = sp.digits(x);
                            if (std::any_of(outside.begin(), outside.end(), [&](std::size_t j) { return d[j] != 0; })) {
                                t[x] = CycNum(sp.p());
                                continue;
                            }
                        }
                        t[x] *= sc;
                    }
                    return t;
                }};
    };
    return {std::move(m), o, l0, i0, core};
}

D2Elem D2Elem::operator+(const D2Elem& o) const {
    same_model(*m_, *o.m_, "D2Elem::operator+");
    if (o_ != o.o_) throw DomainError("D2Elem::operator+: basepoints differ");
    auto a = *this, b = o;
    return {m_, o_, kInf, -kInf, [a, b](long l, long i) { return a.at(l, i) + b.at(l, i); }};
}

D2Elem D2Elem::operator-(const D2Elem& o) const { return *this + o.scaled(Rational(-1)); }

D2Elem D2Elem::scaled(const Rational& r) const { return scaled(cyc(*m_, r)); }

D2Elem D2Elem::scaled(const CycNum& c) const {
    auto a = *this;
    return {m_, o_, kInf, -kInf, [a, c](long l, long i) { return a.at(l, i).scaled(c); }};
}

D2Elem D2Elem::checked() const {
    auto a = *this;
    return {m_, o_, kInf, -kInf, [a](long l, long i) { return a.at(l, i).checked(); }};
}

D2Elem D2Elem::rebased(const VirtualMeasure& v) const {
    if (v.from() != o_) throw DomainError("D2Elem::rebased: measure must start at the basepoint");
    return D2Elem(m_, v.to(), lmax_, imin_, core_).scaled(v.scalar());
}

D2Elem D2Elem::reindexed(long da, long db) const {
    auto a = *this;
    auto m2 = make_model(m_->reindexed(da, db));
    const C2Model* mp = m2.get();
    return {m2, o_ - da, kInf, -kInf,
            [a, mp, da, db](long l, long i) { return rehome(a.at(l + da, i + da), mp->inner(l, i), db, 1, 1); }};
}

// ---------------------------------------------------------------- D2Dist

D2Dist::D2Dist(C2Ptr m, long o, long lmax, long imin, Core core)
    : m_(std::move(m)), o_(o), lmax_(lmax), imin_(imin), core_(std::move(core)) {}

Dist1 D2Dist::at(long l, long i) const {
    if (i < l) throw DomainError("D2Dist::at: window with i < l");
    if (l > lmax_ || i < imin_) throw Unavailable("D2Dist::at: window outside the representable range");
    return core_(l, i);
}

D2Dist D2Dist::from_window(C2Ptr m, long o, long l0, long i0, Dist1 g) {
    const C2Model* mp = m.get();
    auto core = [mp, g, l0, i0](long l, long i) {
        Dist1 r = g;
        if (l < l0) {
            TripleC1 T(mp->inner(l, l0), mp->inner(l, i0), mp->inner(l0, i0));
            r = pull_beta(T, r, Haar(T.sub(), 1));
        }
        if (i > i0) r = push_alpha(TripleC1(mp->inner(l, i0), mp->inner(l, i), mp->inner(i0, i)), r);
        return r;
    };
    return {std::move(m), o, l0, i0, core};
}

D2Dist D2Dist::operator+(const D2Dist& o) const {
    same_model(*m_, *o.m_, "D2Dist::operator+");
    if (o_ != o.o_) throw DomainError("D2Dist::operator+: basepoints differ");
    auto a = *this, b = o;
    return {m_, o_, std::min(lmax_, o.lmax_), std::max(imin_, o.imin_), [a, b](long l, long i) { return a.at(l, i) + b.at(l, i); }};
}

D2Dist D2Dist::operator-(const D2Dist& o) const { return *this + o.scaled(Rational(-1)); }

D2Dist D2Dist::scaled(const Rational& r) const {
    auto a = *this;
    const CycNum c = cyc(*m_, r);
    return {m_, o_, lmax_, imin_, [a, c](long l, long i) { return a.at(l, i).scaled(c); }};
}

D2Dist D2Dist::checked() const {
    auto a = *this;
    return {m_, o_, lmax_, imin_, [a](long l, long i) { return a.at(l, i).checked(); }};
}

D2Dist D2Dist::rebased(const VirtualMeasure& v) const {
    if (v.to() != o_) throw DomainError("D2Dist::rebased: measure must end at the basepoint");
    return D2Dist(m_, v.from(), lmax_, imin_, core_).scaled(v.scalar());
}

D2Dist D2Dist::reindexed(long da, long db) const {
    auto a = *this;
    auto m2 = make_model(m_->reindexed(da, db));
    const C2Model* mp = m2.get();
    return {m2, o_ - da, shift_opt(lmax_, da), shift_opt(imin_, da),
            [a, mp, da, db](long l, long i) { return rehome(a.at(l + da, i + da), mp->inner(l, i), db, 1, 1); }};
}

CycNum pair(const D2Elem& x, const D2Dist& g) {
    same_model(*x.model(), *g.model(), "pair");
    if (x.basepoint() != g.basepoint()) throw DomainError("pair: basepoints differ");
    const long l = finite(g.lmax()) ? g.lmax() : (finite(g.imin()) ? g.imin() : 0);
    const long i = finite(g.imin()) ? std::max(g.imin(), l) : l;
    return g.at(l, i).apply(x.at(l, i));
}

// ---------------------------------------------------------------- E2Fn, E2Dist

E2Fn::E2Fn(C2Ptr m, Tag tag, long lmax, Core core) : m_(std::move(m)), tag_(tag), lmax_(lmax), core_(std::move(core)) {}

Fn1 E2Fn::at(long l, long i) const {
    if (i < l) throw DomainError("E2Fn::at: window with i < l");
    if (l > lmax_) throw Unavailable("E2Fn::at: function is not invariant at this level");
    return core_(l, i);
}

E2Fn E2Fn::cylinder(C2Ptr m, long l0, long i0, long lo, long hi, Fn0 table) {
    const ModelPtr w0 = m->inner(l0, i0);
    if (table.space() != w0->window_space(lo, hi)) throw DomainError("E2Fn::cylinder: table does not match bi-window");
    const CoordList c0 = w0->coords(lo, hi);
    const C2Model* mp = m.get();
    auto core = [mp, c0, table, lo](long l, long i) -> Fn1 {
        const ModelPtr w = mp->inner(l, i);
        const C1Model* wp = w.get();
        std::optional<long> supp;
        if (auto t = w->top()) supp = std::max(*t, lo);
        return {w, Fn1::Tag::E, lo, supp,
                [wp, c0, table](long a, long b) { return coord_pull(table, wp->window_space(a, b), c0, wp->coords(a, b)); }};
    };
    return {std::move(m), Tag::E, l0, core};
}

E2Fn E2Fn::constant(C2Ptr m, const CycNum& c) {
    const C2Model* mp = m.get();
    return {std::move(m), Tag::Etilde, kInf, [mp, c](long l, long i) { return Fn1::constant(mp->inner(l, i), c); }};
}

E2Fn E2Fn::operator+(const E2Fn& o) const {
    same_model(*m_, *o.m_, "E2Fn::operator+");
    auto a = *this, b = o;
    const Tag t = tag_ == Tag::Etilde && o.tag_ == Tag::Etilde ? Tag::Etilde : Tag::E;
    return {m_, t, std::min(lmax_, o.lmax_), [a, b](long l, long i) { return a.at(l, i) + b.at(l, i); }};
}

E2Fn E2Fn::operator*(const E2Fn& o) const {
    same_model(*m_, *o.m_, "E2Fn::operator*");
    auto a = *this, b = o;
    const Tag t = tag_ == Tag::Etilde && o.tag_ == Tag::Etilde ? Tag::Etilde : Tag::E;
    return {m_, t, std::min(lmax_, o.lmax_), [a, b](long l, long i) { return a.at(l, i) * b.at(l, i); }};
}

E2Fn E2Fn::scaled(const CycNum& c) const {
    auto a = *this;
    return {m_, tag_, lmax_, [a, c](long l, long i) { return a.at(l, i).scaled(c); }};
}

E2Fn E2Fn::checked() const {
    auto a = *this;
    return {m_, tag_, lmax_, [a](long l, long i) { return a.at(l, i).checked(); }};
}

E2Dist::E2Dist(C2Ptr m, Tag tag, long imin, Core core) : m_(std::move(m)), tag_(tag), imin_(imin), core_(std::move(core)) {}

Dist1 E2Dist::at(long l, long i) const {
    if (i < l) throw DomainError("E2Dist::at: window with i < l");
    if (i < imin_) throw Unavailable("E2Dist::at: window outside the representable range");
    return core_(l, i);
}

CycNum pair(const E2Fn& f, const E2Dist& g) {
    same_model(*f.model(), *g.model(), "pair");
    const long l = finite(f.lmax()) ? f.lmax() : (finite(g.imin()) ? g.imin() : 0);
    const long i = finite(g.imin()) ? std::max(g.imin(), l) : l;
    return g.at(l, i).apply(f.at(l, i));
}

D2Elem operator*(const E2Fn& f, const D2Elem& x) {
    same_model(*f.model(), *x.model(), "module product");
    return {x.model(), x.basepoint(), f.lmax(), -kInf, [f, x](long l, long i) { return f.at(l, i) * x.at(l, i); }};
}

D2Dist operator*(const E2Fn& f, const D2Dist& g) {
    same_model(*f.model(), *g.model(), "module product");
    return {g.model(), g.basepoint(), std::min(f.lmax(), g.lmax()), g.imin(),
            [f, g](long l, long i) { return g.at(l, i).times(f.at(l, i)); }};
}

// ---------------------------------------------------------------- Fourier

namespace {
C2Ptr dual_of(const C2Model& m, C2Ptr given) { return given ? given : make_model(m.dual()); }
}  // namespace

D2Elem fourier2(const D2Elem& x, C2Ptr dm) {
    dm = dual_of(*x.model(), dm);
    const C2Model* dp = dm.get();
    return {dm, -x.basepoint(), kInf, -kInf, [x, dp](long L, long H) {
                const Fn1 f = x.at(-H, -L);
                return fourier1(f, Haar(f.model(), 1), dp->inner(L, H));
            }};
}

D2Dist fourier2(const D2Dist& g, C2Ptr dm) {
    dm = dual_of(*g.model(), dm);
    const C2Model* dp = dm.get();
    return {dm, -g.basepoint(), neg_index(g.imin()), neg_index(g.lmax()), [g, dp](long L, long H) {
                const Dist1 d = g.at(-H, -L);
                return fourier1_dist(d, Haar(d.model(), 1), dp->inner(L, H));
            }};
}

E2Dist fourier2(const E2Fn& f, C2Ptr dm) {
    dm = dual_of(*f.model(), dm);
    const C2Model* dp = dm.get();
    const auto tag = f.tag() == E2Fn::Tag::E ? E2Dist::Tag::Etildeprime : E2Dist::Tag::Eprime;
    return {dm, tag, neg_index(f.lmax()), [f, dp](long L, long H) { return fourier1_e(f.at(-H, -L), dp->inner(L, H)); }};
}

E2Fn fourier2(const E2Dist& g, C2Ptr dm) {
    dm = dual_of(*g.model(), dm);
    const C2Model* dp = dm.get();
    const auto tag = g.tag() == E2Dist::Tag::Etildeprime ? E2Fn::Tag::E : E2Fn::Tag::Etilde;
    return {dm, tag, neg_index(g.imin()), [g, dp](long l, long i) { return fourier1_e_dist(g.at(-i, -l), dp->inner(l, i)); }};
}

// ---------------------------------------------------------------- representations

D2Elem act(const AutHat& gt, const D2Elem& x) {
    same_model(*gt.model(), *x.model(), "act");
    if (gt.basepoint() != x.basepoint()) throw DomainError("act: basepoints differ");
    const C2Ptr m = x.model();
    const C2Model* mp = m.get();
    const long a = gt.g().a(), b = gt.g().b(), o = x.basepoint();
    const int cinv = gt.g().c().inv().index();
    const VirtualMeasure mu = gt.mu();
    return {m, o, kInf, -kInf, [x, mp, a, b, o, cinv, mu](long l, long i) {
                const Rational s = qp(mp->q(), lattice_shift_sum(*mp, b, l + a, o) - mu.exponent()) / mu.unit();
                return rehome(x.at(l + a, i + a), mp->inner(l, i), b, cinv, s);
            }};
}

D2Dist act(const AutHat& gt, const D2Dist& x) {
    same_model(*gt.model(), *x.model(), "act");
    if (gt.basepoint() != x.basepoint()) throw DomainError("act: basepoints differ");
    const C2Ptr m = x.model();
    const C2Model* mp = m.get();
    const long a = gt.g().a(), b = gt.g().b(), o = x.basepoint();
    const int cinv = gt.g().c().inv().index();
    const VirtualMeasure mu = gt.mu();
    return {m, o, shift_opt(x.lmax(), a), shift_opt(x.imin(), a), [x, mp, a, b, o, cinv, mu](long l, long i) {
                const Rational s = qp(mp->q(), lattice_shift_sum(*mp, b, o, l + a) + mu.exponent()) * mu.unit();
                return rehome(x.at(l + a, i + a), mp->inner(l, i), b, cinv, s);
            }};
}

namespace {
C2Ptr image_model(const C2Ptr& m, const AutElem& g) {
    C2Model t = g.apply(*m);
    return t == *m ? m : make_model(std::move(t));
}
}  // namespace

E2Fn act(const AutElem& g, const E2Fn& f) {
    const C2Ptr t = image_model(f.model(), g);
    const C2Model* tp = t.get();
    const long a = g.a(), b = g.b();
    const int cinv = g.c().inv().index();
    return {t, f.tag(), shift_opt(f.lmax(), a),
            [f, tp, a, b, cinv](long l, long i) { return rehome(f.at(l + a, i + a), tp->inner(l, i), b, cinv, 1); }};
}

E2Dist act(const AutElem& g, const E2Dist& x) {
    const C2Ptr t = image_model(x.model(), g);
    const C2Model* tp = t.get();
    const long a = g.a(), b = g.b();
    const int cinv = g.c().inv().index();
    return {t, x.tag(), shift_opt(x.imin(), a),
            [x, tp, a, b, cinv](long l, long i) { return rehome(x.at(l + a, i + a), tp->inner(l, i), b, cinv, 1); }};
}

// ---------------------------------------------------------------- triples

TripleC2::TripleC2(C2Ptr sub, C2Ptr mid, C2Ptr quot) : sub_(std::move(sub)), mid_(std::move(mid)), quot_(std::move(quot)) {
    for (const C2Model* m : {sub_.get(), quot_.get()})
        if (m->outer_shift() != mid_->outer_shift() || m->inner_shift() != mid_->inner_shift())
            throw DomainError("TripleC2: the three models must share their shifts");
    std::vector<long> pts;
    for (const C2Model* m : {sub_.get(), mid_.get(), quot_.get()})
        for (const auto& p : m->pieces())
            if (p.from > -kInf / 2) pts.push_back(p.from);
    pts.push_back(pts.empty() ? 0 : *std::min_element(pts.begin(), pts.end()) - 1);
    for (long k : pts) {
        const Slot s1 = sub_->slice(k), s2 = mid_->slice(k), s3 = quot_->slice(k);
        const bool e1 = s1.a >= s1.b, e3 = s3.a >= s3.b;
        bool ok;
        if (e1 && e3) ok = s2.a >= s2.b;
        else if (e1) ok = s3.a == s2.a && s3.b == s2.b;
        else if (e3) ok = s1.a == s2.a && s1.b == s2.b;
        else ok = s1.a == s2.a && s3.a == s1.b && s3.b == s2.b;
        if (!ok) throw DomainError("TripleC2: slice " + std::to_string(k) + " is not split into sub and quotient");
    }
}

TripleC2 TripleC2::split(C2Ptr mid, const std::vector<std::pair<long, long>>& cuts) {
    if (cuts.empty() || cuts.front().first > -kInf / 2) throw DomainError("TripleC2::split: first cut must start at -inf");
    std::vector<long> pts{-kInf};
    for (const auto& p : mid->pieces())
        if (p.from > -kInf / 2) pts.push_back(p.from);
    for (const auto& c : cuts)
        if (c.first > -kInf / 2) pts.push_back(c.first);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Piece> s1, s3;
    for (long x : pts) {
        const Slot sl = mid->slice(x);
        long c = cuts.front().second;
        for (const auto& cu : cuts)
            if (cu.first <= x) c = cu.second;
        c = clampl(c, sl.a, sl.b);
        s1.push_back({x, sl.a, c});
        s3.push_back({x, c, sl.b});
    }
    auto sub = make_model(C2Model(mid->field_ptr(), s1, mid->outer_shift(), mid->inner_shift(), mid->name() + ".sub"));
    auto quot = make_model(C2Model(mid->field_ptr(), s3, mid->outer_shift(), mid->inner_shift(), mid->name() + ".quot"));
    return {sub, std::move(mid), quot};
}

TripleC1 TripleC2::at(long l, long i) const { return {sub_->inner(l, i), mid_->inner(l, i), quot_->inner(l, i)}; }

TripleC2 TripleC2::dual() const {
    return {make_model(quot_->dual()), make_model(mid_->dual()), make_model(sub_->dual())};
}

TripleC2 TripleC2::transformed(const AutElem& g) const {
    return {image_model(sub_, g), image_model(mid_, g), image_model(quot_, g)};
}

// ---------------------------------------------------------------- images

namespace {
Rational c_one(const C2Ptr& m, long l, long o) { return VirtualMeasure::canonical(m, l, o, VirtualMeasure::Kind::One).scalar(); }
Rational c_delta(const C2Ptr& m, long l, long o) {
    return VirtualMeasure::canonical(m, l, o, VirtualMeasure::Kind::Delta).scalar();
}
long need_top(const C2Model& m, const char* what) {
    auto t = m.top();
    if (!t) throw CapabilityError(std::string(what) + " requires a cC2 sub");
    return *t;
}
long need_bottom(const C2Model& m, const char* what) {
    auto b = m.bottom();
    if (!b) throw CapabilityError(std::string(what) + " requires a dC2 quotient");
    return *b;
}
}  // namespace

D2Elem push_beta(const TripleC2& T, const D2Elem& x, const Rational& mu) {
    same_model(*T.mid(), *x.model(), "push_beta");
    const long top = need_top(*T.sub(), "push_beta");
    const int p = T.mid()->field().p();
    return {T.quot(), x.basepoint(), kInf, top, [T, x, mu, p](long l, long i) {
                const TripleC1 t = T.at(l, i);
                return push_beta(t, x.at(l, i), Haar(t.sub(), mu));
            }};
}

D2Elem pull_alpha(const TripleC2& T, const D2Elem& x, const Rational& nu) {
    same_model(*T.mid(), *x.model(), "pull_alpha");
    const long bot = need_bottom(*T.quot(), "pull_alpha");
    const CycNum c(T.mid()->field().p(), nu);
    return {T.sub(), x.basepoint(), bot, -kInf, [T, x, c](long l, long i) { return pull_alpha(T.at(l, i), x.at(l, i)).scaled(c); }};
}

D2Elem pull_beta(const TripleC2& T, const D2Elem& y) {
    same_model(*T.quot(), *y.model(), "pull_beta");
    if (!T.sub()->cfC2()) throw CapabilityError("pull_beta on D requires a cfC2 sub");
    const int p = T.mid()->field().p();
    return {T.mid(), y.basepoint(), kInf, -kInf, [T, y, p](long l, long i) {
                return pull_beta(T.at(l, i), y.at(l, i)).scaled(CycNum(p, c_one(T.sub(), l, y.basepoint())));
            }};
}

D2Elem push_alpha(const TripleC2& T, const D2Elem& x) {
    same_model(*T.sub(), *x.model(), "push_alpha");
    if (!T.quot()->dfC2()) throw CapabilityError("push_alpha on D requires a dfC2 quotient");
    const int p = T.mid()->field().p();
    return {T.mid(), x.basepoint(), kInf, -kInf, [T, x, p](long l, long i) {
                return push_alpha(T.at(l, i), x.at(l, i)).scaled(CycNum(p, c_delta(T.quot(), l, x.basepoint())));
            }};
}

D2Dist pull_beta(const TripleC2& T, const D2Dist& h, const Rational& mu) {
    same_model(*T.quot(), *h.model(), "pull_beta");
    const long top = need_top(*T.sub(), "pull_beta");
    return {T.mid(), h.basepoint(), h.lmax(), std::max(h.imin(), top), [T, h, mu](long l, long i) {
                const TripleC1 t = T.at(l, i);
                return pull_beta(t, h.at(l, i), Haar(t.sub(), mu));
            }};
}

D2Dist push_alpha(const TripleC2& T, const D2Dist& g, const Rational& nu) {
    same_model(*T.sub(), *g.model(), "push_alpha");
    const long bot = need_bottom(*T.quot(), "push_alpha");
    const CycNum c(T.mid()->field().p(), nu);
    return {T.mid(), g.basepoint(), std::min(g.lmax(), bot), g.imin(),
            [T, g, c](long l, long i) { return push_alpha(T.at(l, i), g.at(l, i)).scaled(c); }};
}

D2Dist push_beta(const TripleC2& T, const D2Dist& g) {
    same_model(*T.mid(), *g.model(), "push_beta");
    if (!T.sub()->cfC2()) throw CapabilityError("push_beta on D' requires a cfC2 sub");
    const int p = T.mid()->field().p();
    return {T.quot(), g.basepoint(), g.lmax(), g.imin(), [T, g, p](long l, long i) {
                return push_beta(T.at(l, i), g.at(l, i)).scaled(CycNum(p, c_one(T.sub(), l, g.basepoint())));
            }};
}

D2Dist pull_alpha(const TripleC2& T, const D2Dist& g) {
    same_model(*T.mid(), *g.model(), "pull_alpha");
    if (!T.quot()->dfC2()) throw CapabilityError("pull_alpha on D' requires a dfC2 quotient");
    const int p = T.mid()->field().p();
    return {T.sub(), g.basepoint(), g.lmax(), g.imin(), [T, g, p](long l, long i) {
                return pull_alpha(T.at(l, i), g.at(l, i)).scaled(CycNum(p, c_delta(T.quot(), l, g.basepoint())));
            }};
}

// ---------------------------------------------------------------- canonical elements

D2Dist one_mu(C2Ptr e1, long o, const Rational& mu) {
    const long top = need_top(*e1, "one_mu");
    const long i0 = std::max(top, o);
    const Haar h(e1->inner(o, i0), mu);
    return D2Dist::from_window(std::move(e1), o, o, i0, Dist1::haar(h));
}

D2Dist delta_nu(C2Ptr e3, long o, const Rational& nu) {
    const long bot = need_bottom(*e3, "delta_nu");
    const long l0 = std::min(bot, o);
    const Dist1 d = Dist1::delta0(e3->inner(l0, o)).scaled(CycNum(e3->field().p(), nu));
    return D2Dist::from_window(std::move(e3), o, l0, o, d);
}

D2Elem one(C2Ptr e1, long o) {
    if (!e1->cfC2()) throw CapabilityError("one requires a cfC2 model");
    const C2Model* mp = e1.get();
    const C2Ptr keep = e1;
    return {std::move(e1), o, kInf, -kInf, [mp, keep, o](long l, long i) {
                return Fn1::constant(mp->inner(l, i), cyc(*mp, c_one(keep, l, o))).retagged(Fn1::Tag::D);
            }};
}

D2Elem delta0(C2Ptr e3, long o) {
    if (!e3->dfC2()) throw CapabilityError("delta0 requires a dfC2 model");
    const C2Model* mp = e3.get();
    const C2Ptr keep = e3;
    return {std::move(e3), o, kInf, -kInf, [mp, keep, o](long l, long i) {
                const ModelPtr w = mp->inner(l, i);
                return Fn1::indicator(w, *w->bottom()).scaled(cyc(*mp, c_delta(keep, l, o)));
            }};
}

D2Dist char_dist(const TripleC2& T, long o, const Rational& mu, const Rational& nu) {
    return push_alpha(T, one_mu(T.sub(), o, mu), nu);
}

D2Elem char_fn(const TripleC2& T, long o) { return push_alpha(T, one(T.sub(), o)); }

// ---------------------------------------------------------------- comparison

void Compare2Report::merge(const Compare2Report& o) {
    if (ok && !o.ok) first_failure = o.first_failure;
    ok = ok && o.ok;
    windows += o.windows;
    skipped += o.skipped;
}

namespace {

bool within(const C2Model& m, long l, long i, long lo, long hi, std::size_t cap) {
    const long d = m.biwindow_dim(l, i, lo, hi);
    std::size_t pts = 1;
    for (long k = 0; k < d; ++k) {
        pts *= static_cast<std::size_t>(m.q());
        if (pts > cap) return false;
    }
    return true;
}

void fail(Compare2Report& r, const std::string& what) {
    if (r.ok) r.first_failure = what;
    r.ok = false;
}

void finish(Compare2Report& r) {
    if (r.windows == 0) fail(r, "no bi-window was compared");
}

template <class A, class B>
void compare_win(Compare2Report& r, const A& fa, const B& fb, long l, long i, long m, long n) {
    try {
        ++r.windows;
        if (fa.at(m, n) != fb.at(m, n)) fail(r, "tables differ on " + win(l, i, m, n));
    } catch (const Unavailable&) {
        --r.windows;
        ++r.skipped;
    }
}

// Inner windows that determine a pair of functions on one outer window.
template <class F>
void compare_fns(Compare2Report& r, const C2Model& M, const F& fa, const F& fb, long l, long i, long range, std::size_t cap) {
    long m = std::min(fa.inv(), fb.inv());
    long n = range;
    if (fa.supp() && fb.supp()) n = std::max(*fa.supp(), *fb.supp());
    if (m > n) m = n;
    bool any = false;
    if (within(M, l, i, m, n, cap)) {
        compare_win(r, fa, fb, l, i, m, n);
        any = true;
    }
    for (long lo = -range; lo <= std::min(m, range); ++lo)
        for (long hi = lo; hi <= range; ++hi) {
            if (lo == m && hi == n) continue;
            if (!within(M, l, i, lo, hi, cap)) continue;
            compare_win(r, fa, fb, l, i, lo, hi);
            any = true;
        }
    if (!any) ++r.skipped;
}

}  // namespace

Compare2Report compare2(const D2Dist& a, const D2Dist& b, long range, std::size_t cap) {
    Compare2Report r;
    same_model(*a.model(), *b.model(), "compare2");
    const C2Model& M = *a.model();
    const long lmax = std::min(a.lmax(), b.lmax()), imin = std::max(a.imin(), b.imin());
    for (long l = -range; l <= std::min(lmax, range); ++l)
        for (long i = std::max(l, imin); i <= range; ++i) {
            const Dist1 da = a.at(l, i), db = b.at(l, i);
            for (long m = -range; m <= range; ++m)
                for (long n = m; n <= range; ++n)
                    if (within(M, l, i, m, n, cap)) compare_win(r, da, db, l, i, m, n);
        }
    finish(r);
    return r;
}

Compare2Report compare2(const D2Elem& a, const D2Elem& b, long range, std::size_t cap) {
    Compare2Report r;
    same_model(*a.model(), *b.model(), "compare2");
    for (long l = -range; l <= range; ++l)
        for (long i = l; i <= range; ++i) {
            try {
                compare_fns(r, *a.model(), a.at(l, i), b.at(l, i), l, i, range, cap);
            } catch (const Unavailable&) {
                ++r.skipped;
            }
        }
    finish(r);
    return r;
}

Compare2Report compare2(const E2Fn& a, const E2Fn& b, long range, std::size_t cap) {
    Compare2Report r;
    same_model(*a.model(), *b.model(), "compare2");
    const long lmax = std::min(a.lmax(), b.lmax());
    for (long l = -range; l <= std::min(lmax, range); ++l)
        for (long i = l; i <= range; ++i) {
            try {
                compare_fns(r, *a.model(), a.at(l, i), b.at(l, i), l, i, range, cap);
            } catch (const Unavailable&) {
                ++r.skipped;
            }
        }
    finish(r);
    return r;
}

Compare2Report compare2(const E2Dist& a, const E2Dist& b, long range, std::size_t cap) {
    Compare2Report r;
    same_model(*a.model(), *b.model(), "compare2");
    const C2Model& M = *a.model();
    const long imin = std::max(a.imin(), b.imin());
    for (long l = -range; l <= range; ++l)
        for (long i = std::max(l, imin); i <= range; ++i) {
            const Dist1 da = a.at(l, i), db = b.at(l, i);
            for (long m = -range; m <= range; ++m)
                for (long n = m; n <= range; ++n)
                    if (within(M, l, i, m, n, cap)) compare_win(r, da, db, l, i, m, n);
        }
    finish(r);
    return r;
}

Compare2Report poisson2_verify(PoissonKind which, const TripleC2& T, long o, const Rational& mu, const Rational& nu,
                               long range, std::size_t cap) {
    const TripleC2 D = T.dual();
    if (which == PoissonKind::I) {
        const D2Dist lhs = fourier2(char_dist(T, o, mu, nu), D.mid());
        const D2Dist rhs = char_dist(D, -o, nu, mu);
        return compare2(lhs, rhs, range, cap);
    }
    const D2Elem lhs = fourier2(char_fn(T, o), D.mid());
    const D2Elem rhs = char_fn(D, -o);
    return compare2(lhs, rhs, range, cap);
}

}  // namespace fh
