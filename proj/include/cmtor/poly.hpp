#ifndef CMTOR_POLY_HPP
#define CMTOR_POLY_HPP

#include "cmtor/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmtor {

// Dense univariate polynomial over an exact field K.
// K needs: default ctor (zero), +, -, *, /, ==.
template <class K>
struct poly {
    std::vector<K> c; // ascending, no trailing zeros

    poly() = default;
    explicit poly(std::vector<K> cs) : c(std::move(cs)) { trim(); }
    static poly zero() { return poly(); }
    static poly constant(const K& k) {
        poly p;
        if (!(k == K())) p.c = {k};
        return p;
    }
    static poly x() { return poly(std::vector<K>{K(), unit()}); }

    static K unit(); // 1 of K; specialized below for arithmetic types we use

    void trim() {
        while (!c.empty() && c.back() == K()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero polynomial
    const K& lc() const {
        if (c.empty()) throw std::domain_error("lc of zero polynomial");
        return c.back();
    }
    K coeff(size_t i) const { return i < c.size() ? c[i] : K(); }

    bool operator==(const poly& o) const { return c == o.c; }
    bool operator!=(const poly& o) const { return !(c == o.c); }
};

template <> inline Rational poly<Rational>::unit() { return Rational(1); }

template <class K>
poly<K> operator+(const poly<K>& a, const poly<K>& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return poly<K>(std::move(r));
}

template <class K>
poly<K> operator-(const poly<K>& a, const poly<K>& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return poly<K>(std::move(r));
}

template <class K>
poly<K> operator-(const poly<K>& a) {
    std::vector<K> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = K() - a.c[i];
    return poly<K>(std::move(r));
}

template <class K>
poly<K> operator*(const poly<K>& a, const poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return poly<K>();
    std::vector<K> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == K()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    }
    return poly<K>(std::move(r));
}

template <class K>
poly<K> operator*(const poly<K>& a, const K& s) {
    std::vector<K> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] * s;
    return poly<K>(std::move(r));
}

// euclidean division, K a field
template <class K>
void divmod(const poly<K>& a, const poly<K>& b, poly<K>& q, poly<K>& r) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    r = a;
    q = poly<K>();
    if (a.degree() < b.degree()) return;
    q.c.assign(a.degree() - b.degree() + 1, K());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        K f = r.lc() / b.lc();
        int d = r.degree() - b.degree();
        q.c[d] = q.c[d] + f;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i + d] = r.c[i + d] - f * b.c[i];
        r.trim();
    }
    q.trim();
}

template <class K>
poly<K> operator/(const poly<K>& a, const poly<K>& b) {
    poly<K> q, r;
    divmod(a, b, q, r);
    return q;
}

template <class K>
poly<K> operator%(const poly<K>& a, const poly<K>& b) {
    poly<K> q, r;
    divmod(a, b, q, r);
    return r;
}

template <class K>
poly<K> exact_div(const poly<K>& a, const poly<K>& b) {
    poly<K> q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::runtime_error("exact_div: division not exact");
    return q;
}

template <class K>
poly<K> monic(const poly<K>& a) {
    if (a.is_zero()) return a;
    K inv = poly<K>::unit() / a.lc();
    return a * inv;
}

template <class K>
poly<K> poly_gcd(poly<K> a, poly<K> b) {
    while (!b.is_zero()) {
        poly<K> r = a % b;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : monic(a);
}

template <class K>
poly<K> derivative(const poly<K>& a) {
    if (a.c.size() <= 1) return poly<K>();
    std::vector<K> r(a.c.size() - 1);
    K k = poly<K>::unit();
    for (size_t i = 1; i < a.c.size(); ++i) {
        r[i - 1] = a.c[i] * k;
        k = k + poly<K>::unit();
    }
    return poly<K>(std::move(r));
}

template <class K>
K eval(const poly<K>& a, const K& x) {
    K r = K();
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

template <class K>
poly<K> compose(const poly<K>& a, const poly<K>& x) {
    poly<K> r;
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + poly<K>::constant(a.c[i]);
    return r;
}

template <class K>
poly<K> poly_pow(poly<K> b, unsigned e) {
    poly<K> r = poly<K>::constant(poly<K>::unit());
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

template <class K>
poly<K> poly_powmod(poly<K> b, Integer e, const poly<K>& m) {
    poly<K> r = poly<K>::constant(poly<K>::unit());
    b = b % m;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// resultant by the subresultant-free classical PRS over a field (fine at our sizes)
template <class K>
K resultant(poly<K> a, poly<K> b) {
    if (a.is_zero() || b.is_zero()) return K();
    K res = poly<K>::unit();
    while (true) {
        if (b.degree() == 0) {
            K r = poly<K>::unit();
            for (int i = 0; i < a.degree(); ++i) r = r * b.lc();
            return res * r;
        }
        poly<K> rem = a % b;
        if (rem.is_zero()) return K(); // common factor
        // res(a,b) = lc(b)^(deg a - deg rem) * (-1)^(deg a * deg b) * res(b, rem)
        K lcpow = poly<K>::unit();
        for (int i = 0; i < a.degree() - rem.degree(); ++i) lcpow = lcpow * b.lc();
        if ((a.degree() & 1) && (b.degree() & 1)) res = K() - res;
        res = res * lcpow;
        a = b;
        b = rem;
    }
}

// Yun squarefree decomposition: returns [(g_i, i)] with f = lc * prod g_i^i
template <class K>
std::vector<std::pair<poly<K>, unsigned>> squarefree_decomposition(const poly<K>& f0) {
    std::vector<std::pair<poly<K>, unsigned>> out;
    poly<K> f = monic(f0);
    if (f.degree() <= 0) return out;
    poly<K> df = derivative(f);
    poly<K> a = poly_gcd(f, df);
    poly<K> b = f / a;
    poly<K> c = df / a;
    poly<K> d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        poly<K> g = poly_gcd(b, d);
        if (g.degree() > 0) out.push_back({g, i});
        b = b / g;
        c = d / g;
        d = c - derivative(b);
        ++i;
    }
    return out;
}

// ---- rational polynomials ----

using qpoly = poly<Rational>;

inline qpoly qpoly_from_int(const std::vector<Integer>& v) {
    std::vector<Rational> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return qpoly(std::move(c));
}

inline qpoly qpoly_from_i64(const std::vector<long long>& v) {
    std::vector<Rational> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return qpoly(std::move(c));
}

// content * primitive integer polynomial
inline void to_integer_poly(const qpoly& f, std::vector<Integer>& zc, Rational& content) {
    if (f.is_zero()) { zc.clear(); content = 0; return; }
    Integer l = 1;
    for (auto& r : f.c) l = ilcm(l, den(r));
    std::vector<Integer> v(f.c.size());
    Integer g = 0;
    for (size_t i = 0; i < f.c.size(); ++i) {
        v[i] = num(f.c[i]) * (l / den(f.c[i]));
        g = igcd(g, iabs(v[i]));
    }
    if (g == 0) g = 1;
    bool neg = v.back() < 0;
    if (neg) g = -g;
    for (auto& x : v) x /= g;
    zc = std::move(v);
    content = Rational(g) / Rational(l);
}

inline std::string qpoly_to_string(const qpoly& f) {
    // the CLI text format: comma-separated ascending coefficients
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) os << ",";
        os << f.c[i];
    }
    return os.str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash))) / Rational(Integer(s.substr(slash + 1)));
    } catch (...) {
        throw std::domain_error("bad rational: " + s);
    }
}

inline qpoly parse_qpoly(const std::string& s) {
    std::vector<Rational> c;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) c.push_back(parse_rational(cur));
    return qpoly(std::move(c));
}

// pretty form like "x^3 - 3*x + 1" for reports
inline std::string qpoly_pretty(const qpoly& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        Rational a = f.coeff(i);
        if (a == 0) continue;
        bool negc = a < 0;
        Rational mag = negc ? Rational(-a) : a;
        if (first) {
            if (negc) os << "-";
            first = false;
        } else {
            os << (negc ? " - " : " + ");
        }
        if (i == 0 || mag != 1) {
            os << mag;
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace cmtor

#endif
