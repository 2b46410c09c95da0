/**
 * @file dim0.cpp
 * @brief Finite-dimensional harmonic analysis.
 */
#include "filtharm/dim0.hpp"

#include <algorithm>

namespace fh {

// ---------------------------------------------------------------- FinSpace

FinSpace::FinSpace(FieldPtr f, int dim) : f_(std::move(f)), dim_(dim), size_(1) {
    if (dim < 0) throw DomainError("FinSpace: negative dimension");
    for (int i = 0; i < dim; ++i) {
        size_ *= static_cast<std::size_t>(f_->q());
        if (size_ > (std::size_t(1) << 24)) throw DomainError("FinSpace: space too large");
    }
}

std::vector<int> FinSpace::digits(std::size_t idx) const {
    std::vector<int> d(static_cast<std::size_t>(dim_));
    const std::size_t q = static_cast<std::size_t>(f_->q());
    for (int j = 0; j < dim_; ++j) {
        d[static_cast<std::size_t>(j)] = static_cast<int>(idx % q);
        idx /= q;
    }
    return d;
}

std::size_t FinSpace::index(const std::vector<int>& d) const {
    std::size_t idx = 0;
    const std::size_t q = static_cast<std::size_t>(f_->q());
    for (int j = dim_ - 1; j >= 0; --j) idx = idx * q + static_cast<std::size_t>(d[static_cast<std::size_t>(j)]);
    return idx;
}

std::size_t FinSpace::add(std::size_t a, std::size_t b) const {
    auto da = digits(a), db = digits(b);
    for (int j = 0; j < dim_; ++j) da[static_cast<std::size_t>(j)] = f_->add(da[static_cast<std::size_t>(j)], db[static_cast<std::size_t>(j)]);
    return index(da);
}

std::size_t FinSpace::neg(std::size_t a) const {
    auto da = digits(a);
    for (auto& x : da) x = f_->neg(x);
    return index(da);
}

std::size_t FinSpace::scale(int c, std::size_t a) const {
    auto da = digits(a);
    for (auto& x : da) x = f_->mul(c, x);
    return index(da);
}

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(FinSpace src, FinSpace tgt, std::vector<std::vector<int>> rows)
    : src_(std::move(src)), tgt_(std::move(tgt)) {
    if (static_cast<int>(rows.size()) != tgt_.dim()) throw DomainError("LinMap: row count must equal target dim");
    m_.reserve(static_cast<std::size_t>(tgt_.dim() * src_.dim()));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != src_.dim()) throw DomainError("LinMap: row length must equal source dim");
        for (int x : r) {
            if (x < 0 || x >= src_.q()) throw DomainError("LinMap: entry outside F_q");
            m_.push_back(x);
        }
    }
}

LinMap LinMap::identity(const FinSpace& v) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(v.dim()), std::vector<int>(static_cast<std::size_t>(v.dim())));
    for (int i = 0; i < v.dim(); ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return {v, v, rows};
}

LinMap LinMap::zero(const FinSpace& src, const FinSpace& tgt) {
    return {src, tgt, std::vector<std::vector<int>>(static_cast<std::size_t>(tgt.dim()), std::vector<int>(static_cast<std::size_t>(src.dim())))};
}

LinMap LinMap::selection(const FinSpace& src, const FinSpace& tgt, const std::vector<int>& sel) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(tgt.dim()), std::vector<int>(static_cast<std::size_t>(src.dim())));
    for (int j = 0; j < tgt.dim(); ++j)
        if (sel[static_cast<std::size_t>(j)] >= 0) rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(sel[static_cast<std::size_t>(j)])] = 1;
    return {src, tgt, rows};
}

std::vector<int> LinMap::apply(const std::vector<int>& v) const {
    const FqField& f = src_.field();
    std::vector<int> w(static_cast<std::size_t>(tgt_.dim()));
    for (int r = 0; r < tgt_.dim(); ++r) {
        int s = 0;
        for (int c = 0; c < src_.dim(); ++c) s = f.add(s, f.mul(entry(r, c), v[static_cast<std::size_t>(c)]));
        w[static_cast<std::size_t>(r)] = s;
    }
    return w;
}

std::size_t LinMap::apply(std::size_t idx) const { return tgt_.index(apply(src_.digits(idx))); }

std::vector<std::size_t> LinMap::image_table() const {
    // Linear in each digit: image(x) = Σ_j image(x_j e_j), built incrementally.
    std::vector<std::size_t> img(src_.size());
    const std::size_t q = static_cast<std::size_t>(src_.q());
    img[0] = 0;
    std::size_t block = 1;
    for (int j = 0; j < src_.dim(); ++j) {
        for (std::size_t c = 1; c < q; ++c) {
            std::vector<int> e(static_cast<std::size_t>(src_.dim()));
            e[static_cast<std::size_t>(j)] = static_cast<int>(c);
            const std::size_t col = tgt_.index(apply(e));
            for (std::size_t r = 0; r < block; ++r) img[c * block + r] = tgt_.add(img[r], col);
        }
        block *= q;
    }
    return img;
}

LinMap LinMap::compose(const LinMap& inner) const {
    if (inner.tgt_ != src_) throw DomainError("LinMap::compose: dimension mismatch");
    const FqField& f = src_.field();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(tgt_.dim()), std::vector<int>(static_cast<std::size_t>(inner.src_.dim())));
    for (int r = 0; r < tgt_.dim(); ++r)
        for (int c = 0; c < inner.src_.dim(); ++c) {
            int s = 0;
            for (int k = 0; k < src_.dim(); ++k) s = f.add(s, f.mul(entry(r, k), inner.entry(k, c)));
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s;
        }
    return {inner.src_, tgt_, rows};
}

LinMap dual_map(const LinMap& m) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.source().dim()), std::vector<int>(static_cast<std::size_t>(m.target().dim())));
    for (int r = 0; r < m.target().dim(); ++r)
        for (int c = 0; c < m.source().dim(); ++c) rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = m.entry(r, c);
    return {m.target(), m.source(), rows};
}

// ---------------------------------------------------------------- Fn0

Fn0::Fn0(FinSpace sp) : sp_(std::move(sp)), t_(sp_.size(), CycNum(sp_.p())) {}

Fn0::Fn0(FinSpace sp, std::vector<CycNum> table) : sp_(std::move(sp)), t_(std::move(table)) {
    if (t_.size() != sp_.size()) throw DomainError("Fn0: table length mismatch");
}

Fn0 Fn0::constant(const FinSpace& sp, const CycNum& c) { return {sp, std::vector<CycNum>(sp.size(), c)}; }

Fn0 Fn0::delta(const FinSpace& sp, std::size_t v) {
    Fn0 f(sp);
    f.t_.at(v) = CycNum(sp.p(), Rational(1));
    return f;
}

Fn0 Fn0::indicator(const Subspace0& h) {
    Fn0 f(h.ambient());
    for (auto e : h.elements()) f.t_[e] = CycNum(h.ambient().p(), Rational(1));
    return f;
}

bool Fn0::is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](const CycNum& c) { return c.is_zero(); });
}

Fn0& Fn0::operator+=(const Fn0& o) {
    if (o.sp_ != sp_) throw DomainError("Fn0: space mismatch");
    for (std::size_t i = 0; i < t_.size(); ++i) t_[i] += o.t_[i];
    return *this;
}

Fn0& Fn0::operator-=(const Fn0& o) {
    if (o.sp_ != sp_) throw DomainError("Fn0: space mismatch");
    for (std::size_t i = 0; i < t_.size(); ++i) t_[i] -= o.t_[i];
    return *this;
}

Fn0& Fn0::operator*=(const CycNum& c) {
    for (auto& x : t_) x *= c;
    return *this;
}

Fn0& Fn0::operator*=(const Rational& r) {
    for (auto& x : t_) x *= r;
    return *this;
}

Fn0 Fn0::hadamard(const Fn0& o) const {
    if (o.sp_ != sp_) throw DomainError("Fn0: space mismatch");
    Fn0 out(sp_);
    for (std::size_t i = 0; i < t_.size(); ++i) out.t_[i] = t_[i] * o.t_[i];
    return out;
}

bool operator==(const Fn0& a, const Fn0& b) { return a.sp_ == b.sp_ && a.t_ == b.t_; }

// ---------------------------------------------------------------- Subspace0

Subspace0::Subspace0(FinSpace ambient, std::vector<std::vector<int>> rows) : amb_(std::move(ambient)) {
    const FqField& f = amb_.field();
    const int n = amb_.dim();
    int r = 0;
    for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
        auto& pr = rows[static_cast<std::size_t>(r)];
        const int inv = f.inv(pr[static_cast<std::size_t>(col)]);
        for (auto& x : pr) x = f.mul(inv, x);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r) continue;
            auto& row = rows[static_cast<std::size_t>(i)];
            const int c = row[static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int k = 0; k < n; ++k) row[static_cast<std::size_t>(k)] = f.sub(row[static_cast<std::size_t>(k)], f.mul(c, pr[static_cast<std::size_t>(k)]));
        }
        ++r;
    }
    rows.resize(static_cast<std::size_t>(r));
    rows_ = std::move(rows);
}

bool Subspace0::contains(const std::vector<int>& v) const {
    const FqField& f = amb_.field();
    std::vector<int> w(v);
    for (const auto& row : rows_) {
        int col = 0;
        while (row[static_cast<std::size_t>(col)] == 0) ++col;
        const int c = w[static_cast<std::size_t>(col)];
        if (c == 0) continue;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] = f.sub(w[k], f.mul(c, row[k]));
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

std::vector<std::size_t> Subspace0::elements() const {
    const FqField& f = amb_.field();
    const int k = dim();
    FinSpace coef(amb_.field_ptr(), k);
    std::vector<std::size_t> out;
    out.reserve(coef.size());
    for (std::size_t c = 0; c < coef.size(); ++c) {
        auto cd = coef.digits(c);
        std::vector<int> v(static_cast<std::size_t>(amb_.dim()));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < amb_.dim(); ++j)
                v[static_cast<std::size_t>(j)] = f.add(v[static_cast<std::size_t>(j)], f.mul(cd[static_cast<std::size_t>(i)], rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        out.push_back(amb_.index(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace0> enumerate_subspaces(const FinSpace& v) {
    const int n = v.dim();
    const int q = v.q();
    std::vector<Subspace0> out;
    // Choose a pivot set, then fill the free entries to the right of each pivot.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> piv;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) piv.push_back(j);
        std::vector<std::pair<int, int>> free;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (int c = piv[r] + 1; c < n; ++c)
                if (!(mask & (1u << c))) free.emplace_back(static_cast<int>(r), c);
        std::size_t count = 1;
        for (std::size_t i = 0; i < free.size(); ++i) count *= static_cast<std::size_t>(q);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::vector<std::vector<int>> rows(piv.size(), std::vector<int>(static_cast<std::size_t>(n)));
            for (std::size_t r = 0; r < piv.size(); ++r) rows[r][static_cast<std::size_t>(piv[r])] = 1;
            std::size_t t = idx;
            for (auto [r, c] : free) {
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(t % static_cast<std::size_t>(q));
                t /= static_cast<std::size_t>(q);
            }
            out.emplace_back(v, rows);
        }
    }
    return out;
}

// ---------------------------------------------------------------- operations

CycNum pairing0(const Fn0& f, const Fn0& g) {
    if (f.space() != g.space()) throw DomainError("pairing0: space mismatch");
    CycNum s(f.space().p());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero() || g[i].is_zero()) continue;
        s += f[i] * g[i];
    }
    return s;
}

Fn0 push0(const LinMap& pi, const Fn0& f) {
    if (f.space() != pi.source()) throw DomainError("push0: function not on source");
    const auto img = pi.image_table();
    Fn0 out(pi.target());
    for (std::size_t v = 0; v < f.size(); ++v)
        if (!f[v].is_zero()) out[img[v]] += f[v];
    return out;
}

Fn0 pull0(const LinMap& pi, const Fn0& g) {
    if (g.space() != pi.target()) throw DomainError("pull0: function not on target");
    const auto img = pi.image_table();
    Fn0 out(pi.source());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = g[img[v]];
    return out;
}

Fn0 fourier0(const Fn0& f) {
    // ψ(<u,v>) factors over coordinates, so transform one axis at a time.
    const FinSpace& sp = f.space();
    const FqField& fld = sp.field();
    const int p = fld.p();
    const std::size_t n = sp.size();
    const std::size_t q = static_cast<std::size_t>(fld.q());
    std::vector<CycNum> cur = f.table(), nxt(n, CycNum(p));
    std::vector<int> kern(q * q);
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v)
            kern[u * q + v] = (p - fld.trmul(static_cast<int>(u), static_cast<int>(v))) % p;
    std::size_t stride = 1;
    for (int j = 0; j < sp.dim(); ++j) {
        const std::size_t span = stride * q;
        for (std::size_t hi = 0; hi < n; hi += span)
            for (std::size_t lo = 0; lo < stride; ++lo) {
                const std::size_t base = hi + lo;
                for (std::size_t u = 0; u < q; ++u) {
                    CycNum s(p);
                    for (std::size_t v = 0; v < q; ++v) {
                        const CycNum& x = cur[base + v * stride];
                        if (x.is_zero()) continue;
                        const int t = kern[u * q + v];
                        s += t == 0 ? x : x.mul_zeta(t);
                    }
                    nxt[base + u * stride] = std::move(s);
                }
            }
        cur.swap(nxt);
        stride = span;
    }
    return Fn0(sp, std::move(cur));
}

Subspace0 annihilator0(const Subspace0& h) {
    // Kernel of the basis matrix: free columns parametrize solutions.
    const FinSpace& v = h.ambient();
    const FqField& f = v.field();
    const int n = v.dim();
    const auto& rows = h.basis();
    std::vector<int> pivcol;
    for (const auto& r : rows) {
        int c = 0;
        while (r[static_cast<std::size_t>(c)] == 0) ++c;
        pivcol.push_back(c);
    }
    std::vector<std::vector<int>> ker;
    for (int fc = 0; fc < n; ++fc) {
        if (std::find(pivcol.begin(), pivcol.end(), fc) != pivcol.end()) continue;
        std::vector<int> u(static_cast<std::size_t>(n));
        u[static_cast<std::size_t>(fc)] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            u[static_cast<std::size_t>(pivcol[r])] = f.neg(rows[r][static_cast<std::size_t>(fc)]);
        ker.push_back(u);
    }
    return {v, ker};
}

Fn0 check0(const Fn0& f) {
    Fn0 out(f.space());
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = f[f.space().neg(v)];
    return out;
}

Fn0 translate0(const Fn0& f, std::size_t a) {
    const std::size_t na = f.space().neg(a);
    Fn0 out(f.space());
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = f[f.space().add(v, na)];
    return out;
}

Fn0 reverse_digits(const Fn0& f) {
    const FinSpace& sp = f.space();
    Fn0 out(sp);
    for (std::size_t v = 0; v < f.size(); ++v) {
        auto d = sp.digits(v);
        std::reverse(d.begin(), d.end());
        out[sp.index(d)] = f[v];
    }
    return out;
}

}  // namespace fh
