#ifndef CMTOR_NUMERIC_HPP
#define CMTOR_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmtor {

using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer igcd(Integer a, Integer b) { return boost::multiprecision::gcd(a, b); }
inline Integer ilcm(Integer a, Integer b) { return boost::multiprecision::lcm(a, b); }
inline Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer ipow(Integer b, unsigned e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// floor of sqrt, exact
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    return r * r == n;
}

inline Integer powmod(Integer b, Integer e, const Integer& m) {
    return boost::multiprecision::powm(b % m, e, m);
}

// ---- small machine-word helpers ----

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((__uint128_t)a * b % m);
}

inline uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// deterministic Miller-Rabin, valid well beyond 3.3e24 for the listed bases
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

inline bool is_prime_u64(uint64_t n) { return is_prime(Integer(n)); }

inline uint64_t next_prime(uint64_t n) {
    if (n < 2) return 2;
    ++n;
    if (n % 2 == 0) ++n;
    while (!is_prime_u64(n)) n += 2;
    return n;
}

// trial-division factorization; adequate for the discriminant ranges in use
inline std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    if (n == 0) throw std::domain_error("factor_integer(0)");
    n = iabs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// Kronecker symbol (a|n), multiplicative in both arguments; n = 0 is a domain error
inline int kronecker(Integer a, Integer n) {
    if (n == 0) throw std::domain_error("kronecker: n = 0");
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        unsigned e = 0;
        while (n % 2 == 0) { n >>= 1; ++e; }
        if (e & 1) {
            Integer am = ((a % 8) + 8) % 8;
            if (am == 3 || am == 5) sign = -sign;
        }
    }
    // now n odd positive; standard Jacobi with reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a >>= 1;
            Integer nm = n % 8;
            if (nm == 3 || nm == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

// Euler phi and Moebius for machine-size n
inline uint64_t euler_phi(uint64_t n) {
    if (n == 0) throw std::domain_error("euler_phi(0)");
    uint64_t r = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

inline int moebius(uint64_t n) {
    if (n == 0) throw std::domain_error("moebius(0)");
    int r = 1;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

// rational reconstruction of r = u/v mod m with |u|, v <= sqrt(m/2); returns false on failure
inline bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
    Integer bound = isqrt(m / 2);
    Integer r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0 || iabs(t1) > bound) return false;
    if (igcd(iabs(r1), iabs(t1)) != 1 && r1 != 0) return false;
    if (t1 < 0) { t1 = -t1; r1 = -r1; }
    out = Rational(r1) / Rational(t1);
    return true;
}

} // namespace cmtor

#endif
