#pragma once
/**
 * @file oracles.hpp
 * @brief Slow, independent reference computations used by the unit tests.
 */

#include "filtharm/dim0.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace oracle {

using fh::CycNum;
using Cx = std::complex<double>;

/// Numerical value of a cyclotomic number at zeta = exp(2 pi i / p).
inline Cx eval(const CycNum& z) {
    const int p = z.prime();
    Cx s = 0;
    for (std::size_t k = 0; k < z.coeffs().size(); ++k)
        s += z.coeffs()[k].get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(k) / p);
    return s;
}

inline bool close(Cx a, Cx b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a) + std::abs(b)); }

/// Trace by Frobenius: a + a^p + ... + a^{p^{n-1}}, using only field multiplication.
inline int trace(const fh::FqField& f, int a) {
    int s = 0, x = a;
    for (int k = 0; k < f.n(); ++k) {
        s = f.add(s, x);
        int y = 1;
        for (int e = 0; e < f.p(); ++e) y = f.mul(y, x);
        x = y;
    }
    return s;
}

/// F(f)(u) = Σ_v f(v) conj(psi(Σ u_k v_k)), summed point by point.
inline fh::Fn0 dft(const fh::Fn0& f) {
    const fh::FinSpace& sp = f.space();
    const fh::FqField& fld = sp.field();
    fh::Fn0 out(sp);
    for (std::size_t u = 0; u < sp.size(); ++u) {
        const auto ud = sp.digits(u);
        CycNum s(sp.p());
        for (std::size_t v = 0; v < sp.size(); ++v) {
            const auto vd = sp.digits(v);
            int dot = 0;
            for (int k = 0; k < sp.dim(); ++k) dot = fld.add(dot, fld.mul(ud[static_cast<std::size_t>(k)], vd[static_cast<std::size_t>(k)]));
            s += f[v] * fh::psi(fld, dot).conj();
        }
        out[u] = s;
    }
    return out;
}

/// Number of k-dimensional subspaces of F_q^n.
inline long gaussian_binomial(long n, long k, long q) {
    long num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= static_cast<long>(std::pow(q, n - i)) - 1;
        den *= static_cast<long>(std::pow(q, i + 1)) - 1;
    }
    return num / den;
}

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    fh::Rational rational() { return fh::frac(uniform(-5, 5), uniform(1, 4)); }
    CycNum cyc(int p) {
        std::vector<fh::Rational> c(static_cast<std::size_t>(p - 1));
        for (auto& x : c) x = uniform(0, 2) == 0 ? fh::Rational(0) : rational();
        return CycNum(p, std::move(c));
    }
    fh::Fn0 table(const fh::FinSpace& sp) {
        fh::Fn0 t(sp);
        for (std::size_t v = 0; v < sp.size(); ++v) t[v] = cyc(sp.p());
        return t;
    }
    fh::LinMap map(const fh::FinSpace& src, const fh::FinSpace& tgt) {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(tgt.dim()), std::vector<int>(static_cast<std::size_t>(src.dim())));
        for (auto& r : rows)
            for (auto& x : r) x = static_cast<int>(uniform(0, src.q() - 1));
        return {src, tgt, rows};
    }
};

}  // namespace oracle
