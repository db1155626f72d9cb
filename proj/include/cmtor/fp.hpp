#ifndef CMTOR_FP_HPP
#define CMTOR_FP_HPP

#include "cmtor/numeric.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace cmtor {

// Polynomials over F_p, p an odd machine prime. Dense ascending coefficient
// vectors, modulus passed explicitly. Hot path for factorization mod p.
using fpoly = std::vector<uint64_t>; // no trailing zeros

inline void fp_trim(fpoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int fp_deg(const fpoly& a) { return (int)a.size() - 1; }

inline fpoly fp_add(const fpoly& a, const fpoly& b, uint64_t p) {
    fpoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = x >= p ? x - p : x;
    }
    fp_trim(r);
    return r;
}

inline fpoly fp_sub(const fpoly& a, const fpoly& b, uint64_t p) {
    fpoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t x = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0);
        r[i] = x >= p ? x - p : x;
    }
    fp_trim(r);
    return r;
}

inline fpoly fp_mul(const fpoly& a, const fpoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    fpoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (__uint128_t)a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

inline fpoly fp_scale(const fpoly& a, uint64_t s, uint64_t p) {
    fpoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod_u64(a[i], s, p);
    fp_trim(r);
    return r;
}

inline uint64_t fp_inv(uint64_t a, uint64_t p) {
    return powmod_u64(a % p, p - 2, p);
}

inline void fp_divmod(const fpoly& a, const fpoly& b, uint64_t p, fpoly& q, fpoly& r) {
    if (b.empty()) throw std::domain_error("fp division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    uint64_t binv = fp_inv(b.back(), p);
    while (fp_deg(r) >= fp_deg(b)) {
        uint64_t f = mulmod_u64(r.back(), binv, p);
        int d = fp_deg(r) - fp_deg(b);
        q[d] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = mulmod_u64(f, b[i], p);
            uint64_t x = r[i + d] + p - sub;
            r[i + d] = x >= p ? x - p : x;
        }
        fp_trim(r);
        if (r.empty()) break;
    }
    fp_trim(q);
}

inline fpoly fp_mod(const fpoly& a, const fpoly& b, uint64_t p) {
    fpoly q, r;
    fp_divmod(a, b, p, q, r);
    return r;
}

inline fpoly fp_monic(const fpoly& a, uint64_t p) {
    if (a.empty()) return a;
    return fp_scale(a, fp_inv(a.back(), p), p);
}

inline fpoly fp_gcd(fpoly a, fpoly b, uint64_t p) {
    while (!b.empty()) {
        fpoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : fp_monic(a, p);
}

inline fpoly fp_deriv(const fpoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    fpoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod_u64(a[i], i % p, p);
    fp_trim(r);
    return r;
}

inline fpoly fp_powmod(fpoly b, Integer e, const fpoly& m, uint64_t p) {
    fpoly r = {1};
    b = fp_mod(b, m, p);
    while (e > 0) {
        if ((e & 1) != 0) r = fp_mod(fp_mul(r, b, p), m, p);
        b = fp_mod(fp_mul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t fp_eval(const fpoly& a, uint64_t x, uint64_t p) {
    uint64_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = (mulmod_u64(r, x, p) + a[i]) % p;
    return r;
}

// distinct-degree decomposition of a monic squarefree f: [(product, degree)]
inline std::vector<std::pair<fpoly, int>> fp_ddf(const fpoly& f0, uint64_t p) {
    std::vector<std::pair<fpoly, int>> out;
    fpoly f = fp_monic(f0, p);
    fpoly h = {0, 1}; // x
    h = fp_mod(h, f, p);
    int d = 0;
    fpoly xp = h;
    while (fp_deg(f) > 0) {
        ++d;
        if (2 * d > fp_deg(f)) {
            out.push_back({f, fp_deg(f)});
            break;
        }
        xp = fp_powmod(xp, Integer(p), f, p); // x^(p^d) mod f
        fpoly diff = fp_sub(xp, fpoly{0, 1}, p);
        fpoly g = fp_gcd(diff, f, p);
        if (fp_deg(g) > 0) {
            out.push_back({g, d});
            f = [&] { fpoly q, r; fp_divmod(f, g, p, q, r); return q; }();
            xp = fp_mod(xp, f, p);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting; rng passed for determinism
inline void fp_edf(const fpoly& f, int d, uint64_t p, std::mt19937_64& rng,
                   std::vector<fpoly>& out) {
    if (fp_deg(f) == d) {
        out.push_back(fp_monic(f, p));
        return;
    }
    Integer e = (ipow(Integer(p), (unsigned)d) - 1) / 2;
    while (true) {
        fpoly a(fp_deg(f), 0);
        for (auto& x : a) x = rng() % p;
        fp_trim(a);
        if (fp_deg(a) < 1) continue;
        fpoly b = fp_powmod(a, e, f, p);
        if (b.empty()) continue;
        b = fp_sub(b, fpoly{1}, p);
        fpoly g = fp_gcd(b, f, p);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            fpoly q, r;
            fp_divmod(f, g, p, q, r);
            fp_edf(g, d, p, rng, out);
            fp_edf(q, d, p, rng, out);
            return;
        }
    }
}

// full factorization of squarefree monic f over F_p
inline std::vector<fpoly> fp_factor_squarefree(const fpoly& f, uint64_t p,
                                               uint64_t seed = 0x5eed) {
    std::mt19937_64 rng(seed);
    std::vector<fpoly> out;
    for (auto& [g, d] : fp_ddf(f, p)) fp_edf(g, d, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool fp_is_squarefree(const fpoly& f, uint64_t p) {
    if (f.empty()) return false;
    fpoly g = fp_gcd(f, fp_deriv(f, p), p);
    return fp_deg(g) == 0;
}

// ---- F_q = F_p[t]/(h), q = p^k; elements are fpoly of degree < k ----

struct fq_ctx {
    uint64_t p;
    fpoly h; // monic irreducible
    int k() const { return fp_deg(h); }
    Integer q() const { return ipow(Integer(p), (unsigned)fp_deg(h)); }
};

using fq = fpoly;

inline fq fq_reduce(const fpoly& a, const fq_ctx& F) { return fp_mod(a, F.h, F.p); }
inline fq fq_add(const fq& a, const fq& b, const fq_ctx& F) { return fp_add(a, b, F.p); }
inline fq fq_sub(const fq& a, const fq& b, const fq_ctx& F) { return fp_sub(a, b, F.p); }
inline fq fq_mul(const fq& a, const fq& b, const fq_ctx& F) {
    return fp_mod(fp_mul(a, b, F.p), F.h, F.p);
}
inline fq fq_pow(fq b, Integer e, const fq_ctx& F) {
    fq r = {1};
    while (e > 0) {
        if ((e & 1) != 0) r = fq_mul(r, b, F);
        b = fq_mul(b, b, F);
        e >>= 1;
    }
    return r;
}
inline fq fq_inv(const fq& a, const fq_ctx& F) {
    if (a.empty()) throw std::domain_error("fq_inv(0)");
    return fq_pow(a, F.q() - 2, F);
}

// polynomials over F_q, coefficients ascending
using fqpoly = std::vector<fq>;

inline void fq_ptrim(fqpoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}
inline int fq_pdeg(const fqpoly& a) { return (int)a.size() - 1; }

inline fqpoly fq_pmul(const fqpoly& a, const fqpoly& b, const fq_ctx& F) {
    if (a.empty() || b.empty()) return {};
    fqpoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].empty()) continue;
            r[i + j] = fq_add(r[i + j], fq_mul(a[i], b[j], F), F);
        }
    }
    fq_ptrim(r);
    return r;
}

inline fqpoly fq_psub(const fqpoly& a, const fqpoly& b, const fq_ctx& F) {
    fqpoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = fq_sub(i < a.size() ? a[i] : fq{}, i < b.size() ? b[i] : fq{}, F);
    fq_ptrim(r);
    return r;
}

inline void fq_pdivmod(const fqpoly& a, const fqpoly& b, const fq_ctx& F, fqpoly& qq, fqpoly& r) {
    if (b.empty()) throw std::domain_error("fq poly division by zero");
    r = a;
    qq.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, fq{});
    fq binv = fq_inv(b.back(), F);
    while (fq_pdeg(r) >= fq_pdeg(b)) {
        fq f = fq_mul(r.back(), binv, F);
        int d = fq_pdeg(r) - fq_pdeg(b);
        qq[d] = f;
        for (size_t i = 0; i < b.size(); ++i)
            r[i + d] = fq_sub(r[i + d], fq_mul(f, b[i], F), F);
        fq_ptrim(r);
        if (r.empty()) break;
    }
    fq_ptrim(qq);
}

inline fqpoly fq_pmod(const fqpoly& a, const fqpoly& b, const fq_ctx& F) {
    fqpoly q, r;
    fq_pdivmod(a, b, F, q, r);
    return r;
}

inline fqpoly fq_pgcd(fqpoly a, fqpoly b, const fq_ctx& F) {
    while (!b.empty()) {
        fqpoly r = fq_pmod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        fq inv = fq_inv(a.back(), F);
        for (auto& cc : a) cc = fq_mul(cc, inv, F);
    }
    return a;
}

inline fqpoly fq_ppowmod(fqpoly b, Integer e, const fqpoly& m, const fq_ctx& F) {
    fqpoly r = {fq{1}};
    b = fq_pmod(b, m, F);
    while (e > 0) {
        if ((e & 1) != 0) r = fq_pmod(fq_pmul(r, b, F), m, F);
        b = fq_pmod(fq_pmul(b, b, F), m, F);
        e >>= 1;
    }
    return r;
}

inline fq fq_peval(const fqpoly& a, const fq& x, const fq_ctx& F) {
    fq r = {};
    for (size_t i = a.size(); i-- > 0;) r = fq_add(fq_mul(r, x, F), a[i], F);
    return r;
}

// all roots in F_q of a polynomial over F_q (via x^q - x splitting + CZ on linears)
inline std::vector<fq> fq_roots(const fqpoly& f0, const fq_ctx& F, uint64_t seed = 0x900d) {
    std::vector<fq> roots;
    if (fq_pdeg(f0) < 1) return roots;
    fqpoly f = f0;
    // strip repeated roots: gcd with derivative is not needed for root *sets*;
    // work with the radical part against x^q - x directly
    fqpoly x = {fq{}, fq{1}};
    fqpoly xq = fq_ppowmod(x, F.q(), f, F);
    fqpoly lin = fq_pgcd(fq_psub(xq, x, F), f, F);
    if (fq_pdeg(lin) < 1) return roots;

    std::mt19937_64 rng(seed);
    Integer e = (F.q() - 1) / 2;
    std::vector<fqpoly> stack = {lin};
    while (!stack.empty()) {
        fqpoly g = stack.back();
        stack.pop_back();
        if (fq_pdeg(g) == 1) {
            // root = -c0 / c1
            fq r = fq_mul(g[0], fq_inv(g[1], F), F);
            r = fq_sub(fq{}, r, F);
            roots.push_back(r);
            continue;
        }
        if (fq_pdeg(g) < 1) continue;
        // random a; gcd((x+a)^((q-1)/2) - 1, g)
        while (true) {
            fq a(F.k());
            for (auto& cc : a) cc = rng() % F.p;
            fp_trim(a);
            fqpoly shift = {a, fq{1}};
            fqpoly t = fq_ppowmod(shift, e, g, F);
            if (t.empty()) continue;
            t = fq_psub(t, fqpoly{fq{1}}, F);
            fqpoly h = fq_pgcd(t, g, F);
            if (fq_pdeg(h) > 0 && fq_pdeg(h) < fq_pdeg(g)) {
                fqpoly q, r;
                fq_pdivmod(g, h, F, q, r);
                stack.push_back(h);
                stack.push_back(q);
                break;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// does v have a square root in F_q (q odd)?
inline bool fq_is_square(const fq& v, const fq_ctx& F) {
    if (v.empty()) return true;
    fq t = fq_pow(v, (F.q() - 1) / 2, F);
    return t == fq{1};
}

} // namespace cmtor

#endif
