#ifndef CMTOR_FACTORQ_HPP
#define CMTOR_FACTORQ_HPP

#include "cmtor/fp.hpp"
#include "cmtor/poly.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace cmtor {

// ---- integer polynomial helpers (dense ascending) ----

using zpoly = std::vector<Integer>;

inline void z_trim(zpoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int z_deg(const zpoly& a) { return (int)a.size() - 1; }

inline zpoly z_mul(const zpoly& a, const zpoly& b) {
    if (a.empty() || b.empty()) return {};
    zpoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline Integer sym_mod(Integer a, const Integer& m) {
    a %= m;
    if (a < 0) a += m;
    if (2 * a > m) a -= m;
    return a;
}

inline zpoly z_mod_sym(zpoly a, const Integer& m) {
    for (auto& x : a) x = sym_mod(x, m);
    z_trim(a);
    return a;
}

inline fpoly z_to_fp(const zpoly& a, uint64_t p) {
    fpoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Integer v = a[i] % p;
        if (v < 0) v += p;
        r[i] = v.convert_to<uint64_t>();
    }
    fp_trim(r);
    return r;
}

inline zpoly fp_to_z(const fpoly& a) {
    zpoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

inline qpoly z_to_q(const zpoly& a) {
    std::vector<Rational> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = Rational(a[i]);
    return qpoly(std::move(c));
}

inline zpoly z_primitive(zpoly a) {
    Integer g = 0;
    for (auto& c : a) g = igcd(g, iabs(c));
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

// Mignotte-style coefficient bound for factors of f (with the spec's 2x margin)
inline Integer factor_coeff_bound(const zpoly& f) {
    Integer norm2 = 0;
    for (auto& c : f) norm2 += c * c;
    Integer b = isqrt(norm2) + 1;
    return (ipow(Integer(2), (unsigned)z_deg(f)) * b) * 2;
}

// ---- Hensel lifting ----

// extended gcd over F_p: s*a + t*b = 1 for coprime a, b; deg s < deg b, deg t < deg a
inline void fp_extgcd(const fpoly& a, const fpoly& b, uint64_t p, fpoly& s, fpoly& t) {
    fpoly r0 = a, r1 = b;
    fpoly s0 = {1}, s1 = {};
    fpoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        fpoly q, r;
        fp_divmod(r0, r1, p, q, r);
        fpoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        fpoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = s2;
        t0 = std::move(t1); t1 = t2;
    }
    if (fp_deg(r0) != 0) throw std::runtime_error("fp_extgcd: inputs not coprime");
    uint64_t inv = fp_inv(r0[0], p);
    s = fp_scale(s0, inv, p);
    t = fp_scale(t0, inv, p);
}

namespace hensel_detail {

inline zpoly zm_reduce(zpoly a, const Integer& m) {
    for (auto& x : a) { x %= m; if (x < 0) x += m; }
    z_trim(a);
    return a;
}

inline zpoly zm_mul(const zpoly& a, const zpoly& b, const Integer& m) {
    return zm_reduce(z_mul(a, b), m);
}

inline zpoly zm_add(const zpoly& a, const zpoly& b, const Integer& m) {
    zpoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Integer x = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
        x %= m;
        if (x < 0) x += m;
        r[i] = x;
    }
    z_trim(r);
    return r;
}

inline zpoly zm_sub(const zpoly& a, const zpoly& b, const Integer& m) {
    zpoly r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Integer x = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
        x %= m;
        if (x < 0) x += m;
        r[i] = x;
    }
    z_trim(r);
    return r;
}

// division by a monic polynomial over Z/m
inline void zm_divmod_monic(const zpoly& a, const zpoly& b, const Integer& m, zpoly& q, zpoly& r) {
    r = a;
    z_trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Integer(0));
    while (z_deg(r) >= z_deg(b)) {
        Integer f = r.back();
        int d = z_deg(r) - z_deg(b);
        q[d] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            Integer x = r[i + d] - f * b[i];
            x %= m;
            if (x < 0) x += m;
            r[i + d] = x;
        }
        z_trim(r);
        if (r.empty()) break;
    }
    z_trim(q);
}

// one quadratic Hensel step (vzGG 15.10): data valid mod m -> valid mod m^2; h monic
inline void hensel_step(const zpoly& f, zpoly& g, zpoly& h, zpoly& s, zpoly& t,
                        const Integer& m) {
    Integer m2 = m * m;
    zpoly fm = zm_reduce(f, m2);
    zpoly e = zm_sub(fm, zm_mul(g, h, m2), m2);
    zpoly q, r;
    zm_divmod_monic(zm_mul(s, e, m2), h, m2, q, r);
    zpoly g1 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
    zpoly h1 = zm_add(h, r, m2);
    zpoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), zpoly{1}, m2);
    zpoly c, d;
    zm_divmod_monic(zm_mul(s, b, m2), h1, m2, c, d);
    zpoly s1 = zm_sub(s, d, m2);
    zpoly t1 = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g1, m2), m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// lift the factorization of monic f (≡ prod leaves mod p) to mod `target`,
// target a power p^(2^k); appends lifted leaves in order
inline void lift_tree(const zpoly& f, const std::vector<fpoly>& leaves, size_t lo, size_t hi,
                      uint64_t p, const Integer& target, std::vector<zpoly>& out) {
    if (hi - lo == 1) {
        out.push_back(zm_reduce(f, target));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    fpoly gl = {1}, gr = {1};
    for (size_t i = lo; i < mid; ++i) gl = fp_mul(gl, leaves[i], p);
    for (size_t i = mid; i < hi; ++i) gr = fp_mul(gr, leaves[i], p);
    fpoly s, t;
    fp_extgcd(gl, gr, p, s, t);
    zpoly G = fp_to_z(gl), H = fp_to_z(gr), S = fp_to_z(s), T = fp_to_z(t);
    Integer m = p;
    while (m < target) {
        hensel_step(f, G, H, S, T, m);
        m *= m;
    }
    lift_tree(zm_reduce(G, target), leaves, lo, mid, p, target, out);
    lift_tree(zm_reduce(H, target), leaves, mid, hi, p, target, out);
}

} // namespace hensel_detail

// ---- Zassenhaus over Z ----

struct q_factorization {
    Rational content; // f = content * prod factors[i]^mult[i], factors monic
    std::vector<std::pair<qpoly, unsigned>> factors;
};

namespace zass_detail {

// factor a monic squarefree integer polynomial; returns monic integer factors
inline std::vector<zpoly> factor_monic_squarefree_z(const zpoly& f) {
    int n = z_deg(f);
    std::vector<zpoly> result;
    if (n <= 1) {
        if (n == 1) result.push_back(f);
        return result;
    }

    // prime selection + achievable-degree bitset across several primes
    uint64_t best_p = 0;
    std::vector<fpoly> best_factors;
    std::vector<bool> degree_ok(n + 1, true);
    uint64_t p = 1000003;
    int tried = 0;
    while (tried < 5) {
        p = next_prime(p);
        fpoly fmod = z_to_fp(f, p);
        if (fp_deg(fmod) != n || !fp_is_squarefree(fmod, p)) continue;
        ++tried;
        auto facs = fp_factor_squarefree(fmod, p);
        std::vector<bool> reach(n + 1, false);
        reach[0] = true;
        for (auto& g : facs) {
            int d = fp_deg(g);
            for (int i = n; i >= d; --i)
                if (reach[i - d]) reach[i] = true;
        }
        for (int i = 0; i <= n; ++i) degree_ok[i] = degree_ok[i] && reach[i];
        if (best_p == 0 || facs.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(facs);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.size() == 1) {
        result.push_back(f);
        return result;
    }

    Integer bound = factor_coeff_bound(f);
    Integer target = best_p;
    while (target <= 2 * bound) target *= target;

    std::vector<zpoly> modular;
    hensel_detail::lift_tree(hensel_detail::zm_reduce(f, target), best_factors, 0,
                             best_factors.size(), best_p, target, modular);

    zpoly rem = f;
    size_t card = 1;
    while (!modular.empty() && 2 * card <= modular.size()) {
        // enumerate subsets of the current modular list of size `card`
        std::vector<size_t> comb(card);
        for (size_t i = 0; i < card; ++i) comb[i] = i;
        bool extracted = false;
        while (true) {
            int dsum = 0;
            for (auto i : comb) dsum += z_deg(modular[i]);
            bool plausible = dsum <= z_deg(rem) && degree_ok[dsum];
            if (plausible && rem[0] != 0) {
                Integer t0 = 1;
                for (auto i : comb) t0 = sym_mod(t0 * modular[i][0], target);
                if (t0 == 0 || rem[0] % t0 != 0) plausible = false;
            }
            if (plausible) {
                zpoly cand = {1};
                for (auto i : comb) cand = z_mod_sym(z_mul(cand, modular[i]), target);
                qpoly qq, rr;
                divmod(z_to_q(rem), z_to_q(cand), qq, rr);
                if (rr.is_zero()) {
                    result.push_back(cand);
                    zpoly newrem(qq.c.size());
                    for (size_t i = 0; i < qq.c.size(); ++i) newrem[i] = num(qq.c[i]);
                    rem = std::move(newrem);
                    std::vector<zpoly> keep;
                    for (size_t i = 0, k = 0; i < modular.size(); ++i) {
                        if (k < comb.size() && comb[k] == i) { ++k; continue; }
                        keep.push_back(std::move(modular[i]));
                    }
                    modular = std::move(keep);
                    extracted = true;
                    break;
                }
            }
            // next combination
            size_t i = card;
            while (i-- > 0) {
                if (comb[i] + (card - i) < modular.size()) {
                    ++comb[i];
                    for (size_t j = i + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = card + 1; break; } // signal done
            }
            if (i == card + 1) break;
        }
        if (!extracted) ++card;
    }
    if (z_deg(rem) > 0) result.push_back(rem);
    return result;
}

// factor a primitive squarefree integer polynomial (any leading coefficient)
inline std::vector<zpoly> factor_squarefree_z(const zpoly& f) {
    Integer lc = f.back();
    if (lc == 1) return factor_monic_squarefree_z(f);
    int n = z_deg(f);
    // g(y) = lc^(n-1) f(y/lc) is monic with integer coefficients
    zpoly g(n + 1);
    g[n] = 1;
    for (int i = 0; i < n; ++i) g[i] = f[i] * ipow(lc, (unsigned)(n - 1 - i));
    auto gf = factor_monic_squarefree_z(g);
    std::vector<zpoly> out;
    for (auto& G : gf) {
        zpoly H(G.size());
        Integer pw = 1; // H(x) = G(lc*x)
        for (size_t i = 0; i < G.size(); ++i) {
            H[i] = G[i] * pw;
            pw *= lc;
        }
        out.push_back(z_primitive(std::move(H)));
    }
    return out;
}

} // namespace zass_detail

// Factor f over Q; zero input is a domain error. content * prod factors^mult
// reproduces f exactly; factors are monic irreducible.
inline q_factorization factor_poly_q(const qpoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_poly_q: zero polynomial");
    q_factorization out;
    out.content = f.lc();
    if (f.degree() == 0) return out;

    for (auto& [part, mult] : squarefree_decomposition(f)) {
        std::vector<Integer> zc;
        Rational cont;
        to_integer_poly(part, zc, cont);
        for (auto& g : zass_detail::factor_squarefree_z(zc))
            out.factors.push_back({monic(z_to_q(g)), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });
    return out;
}

inline bool is_irreducible_q(const qpoly& f) {
    if (f.degree() <= 0) return false;
    auto fac = factor_poly_q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

// ---- cyclotomic polynomials ----

struct cyclotomic_data_t {
    uint64_t n;
    uint64_t phi_n;
    qpoly poly; // Phi_n
};

inline cyclotomic_data_t cyclotomic_data(uint64_t n) {
    if (n == 0) throw std::domain_error("cyclotomic_data(0)");
    std::vector<uint64_t> divs;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        divs.push_back(d);
        if (d != n / d) divs.push_back(n / d);
    }
    qpoly numer = qpoly::constant(1), denom = qpoly::constant(1);
    for (uint64_t d : divs) {
        int mu = moebius(d);
        if (mu == 0) continue;
        uint64_t m = n / d;
        std::vector<Rational> xc(m + 1);
        xc[0] = -1;
        xc[m] = 1;
        qpoly xm1(std::move(xc));
        if (mu == 1) numer = numer * xm1;
        else denom = denom * xm1;
    }
    cyclotomic_data_t out;
    out.n = n;
    out.phi_n = euler_phi(n);
    out.poly = exact_div(numer, denom);
    return out;
}

// ---- bivariate resultants (poly in x with Q[t] coefficients) ----

using bipoly = std::vector<qpoly>; // ascending in x

inline int bi_deg_x(const bipoly& f) {
    int d = -1;
    for (size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_zero()) d = (int)i;
    return d;
}

inline qpoly bi_eval_t(const bipoly& f, const Rational& t0, int degx) {
    std::vector<Rational> c(degx + 1, Rational(0));
    for (size_t i = 0; i < f.size() && (int)i <= degx; ++i) c[i] = eval(f[i], t0);
    return qpoly(std::move(c));
}

inline qpoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    qpoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        qpoly numer = qpoly::constant(1);
        Rational denomv = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            numer = numer * qpoly({-xs[j], Rational(1)});
            denomv *= xs[i] - xs[j];
        }
        acc = acc + numer * (ys[i] / denomv);
    }
    return acc;
}

// Res_x(f, g) as a polynomial in t, by evaluation-interpolation.
// Points where a leading coefficient vanishes are skipped.
inline qpoly resultant_eliminate_x(const bipoly& f, const bipoly& g) {
    int dfx = bi_deg_x(f), dgx = bi_deg_x(g);
    if (dfx < 0 || dgx < 0) throw std::domain_error("resultant of zero polynomial");
    if (dfx == 0 && dgx == 0) return qpoly::constant(1);
    if (dfx == 0) return poly_pow(f[0], (unsigned)dgx);
    if (dgx == 0) return poly_pow(g[0], (unsigned)dfx);
    int tf = 0, tg = 0;
    for (auto& c : f) tf = std::max(tf, std::max(0, c.degree()));
    for (auto& c : g) tg = std::max(tg, std::max(0, c.degree()));
    int dbound = dfx * tg + dgx * tf;
    std::vector<Rational> xs, ys;
    Rational t0 = 0;
    while ((int)xs.size() <= dbound) {
        if (!(eval(f[dfx], t0) == 0) && !(eval(g[dgx], t0) == 0)) {
            xs.push_back(t0);
            ys.push_back(resultant(bi_eval_t(f, t0, dfx), bi_eval_t(g, t0, dgx)));
        }
        t0 = (t0 <= 0 ? Rational(1) - t0 : -t0); // 0, 1, -1, 2, -2, ...
    }
    return interpolate(xs, ys);
}

} // namespace cmtor

#endif
