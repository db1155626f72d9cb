#include "doctest.h"

#include "cmtor/factorq.hpp"

#include <random>

using namespace cmtor;

namespace {

// brute Sylvester determinant over Q[t], expansion by minors; independent of
// the PRS/interpolation path under test
qpoly det_qpoly(std::vector<std::vector<qpoly>> m) {
    size_t n = m.size();
    if (n == 0) return qpoly::constant(1);
    if (n == 1) return m[0][0];
    qpoly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<qpoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<qpoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        qpoly term = m[0][j] * det_qpoly(std::move(minor));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

qpoly sylvester_resultant_x(const bipoly& f, const bipoly& g) {
    int df = bi_deg_x(f), dg = bi_deg_x(g);
    size_t n = df + dg;
    std::vector<std::vector<qpoly>> m(n, std::vector<qpoly>(n));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i) m[r][r + df - i] = f[i];
    for (int r = 0; r < df; ++r)
        for (int i = 0; i <= dg; ++i) m[dg + r][r + dg - i] = g[i];
    return det_qpoly(std::move(m));
}

qpoly reconstruct(const q_factorization& fac) {
    qpoly p = qpoly::constant(fac.content);
    for (auto& [g, e] : fac.factors) p = p * poly_pow(g, e);
    return p;
}

bool irreducible_mod_small_prime(const qpoly& f) {
    std::vector<Integer> zc;
    Rational cont;
    to_integer_poly(f, zc, cont);
    for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
        fpoly fp_ = z_to_fp(zc, p);
        if (fp_deg(fp_) != z_deg(zc) || !fp_is_squarefree(fp_, p)) continue;
        if (fp_factor_squarefree(fp_, p).size() == 1) return true;
    }
    return false;
}

} // namespace

TEST_CASE("kronecker symbol basics and Euler criterion") {
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-7, 3) == -1);
    CHECK(kronecker(-7, 7) == 0);
    CHECK_THROWS_AS(kronecker(3, 0), std::domain_error);
    // Euler criterion a^((p-1)/2) mod p for odd primes
    for (uint64_t p = 3; p <= 200; p = next_prime(p)) {
        for (Integer a = -10; a <= 10; ++a) {
            if (a % p == 0) {
                CHECK(kronecker(a, p) == 0);
                continue;
            }
            Integer e = powmod(a, Integer((p - 1) / 2), Integer(p));
            int euler = (e == 1) ? 1 : -1;
            CHECK(kronecker(a, Integer(p)) == euler);
        }
    }
    // multiplicativity spot checks
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Integer a = (int64_t)(rng() % 2001) - 1000;
        Integer b = (int64_t)(rng() % 2001) - 1000;
        Integer n = (int64_t)(rng() % 999) + 1;
        CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
    }
}

TEST_CASE("polynomial division, gcd, resultant scalar") {
    qpoly f = parse_qpoly("-1,0,1");  // x^2 - 1
    qpoly g = parse_qpoly("1,1");     // x + 1
    CHECK((f % g).is_zero());
    CHECK(f / g == parse_qpoly("-1,1"));
    CHECK(poly_gcd(f, g) == monic(g));
    // Res_x(x - c, g(x)) = g(c) for linear elimination
    qpoly gg = parse_qpoly("2,0,5,1");
    for (int c = -3; c <= 3; ++c) {
        qpoly lin = parse_qpoly(std::to_string(-c) + ",1");
        Rational r = resultant(lin, gg);
        CHECK(r == eval(gg, Rational(c)));
    }
}

TEST_CASE("bivariate resultant against Sylvester determinant oracle") {
    // Res_x(x^2 - 2, t - x^2) = (t - 2)^2
    bipoly f = {parse_qpoly("-2"), qpoly(), qpoly::constant(1)};
    bipoly g = {parse_qpoly("0,1"), qpoly(), qpoly::constant(-1)};
    qpoly r = resultant_eliminate_x(f, g);
    qpoly expect = parse_qpoly("4,-4,1"); // (t-2)^2
    CHECK(monic(r) == monic(expect));
    CHECK(monic(r) == monic(sylvester_resultant_x(f, g)));

    // Res_x(x^2 + 1, t - x^3) = t^2 + 1
    bipoly f2 = {qpoly::constant(1), qpoly(), qpoly::constant(1)};
    bipoly g2 = {parse_qpoly("0,1"), qpoly(), qpoly(), qpoly::constant(-1)};
    qpoly r2 = resultant_eliminate_x(f2, g2);
    CHECK(monic(r2) == parse_qpoly("1,0,1"));
    CHECK(monic(r2) == monic(sylvester_resultant_x(f2, g2)));

    // random cross-check
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        auto rnd = [&](int dx, int dt) {
            bipoly h(dx + 1);
            for (int i = 0; i <= dx; ++i) {
                std::vector<Rational> c(dt + 1);
                for (auto& cc : c) cc = (int64_t)(rng() % 11) - 5;
                h[i] = qpoly(std::move(c));
            }
            if (h[dx].is_zero()) h[dx] = qpoly::constant(1);
            return h;
        };
        bipoly a = rnd(2 + (int)(rng() % 2), 2), b = rnd(2, 1 + (int)(rng() % 2));
        CHECK(resultant_eliminate_x(a, b) == sylvester_resultant_x(a, b));
    }
}

TEST_CASE("factor_poly_q on the named examples") {
    {
        auto fac = factor_poly_q(parse_qpoly("-1,0,1")); // x^2-1
        REQUIRE(fac.factors.size() == 2);
        CHECK(reconstruct(fac) == parse_qpoly("-1,0,1"));
    }
    {
        // 3x^4 + 192x = 3 * x * (x+4) * (x^2-4x+16)
        qpoly f = parse_qpoly("0,192,0,0,3");
        auto fac = factor_poly_q(f);
        CHECK(fac.content == 3);
        REQUIRE(fac.factors.size() == 3);
        CHECK(reconstruct(fac) == f);
        bool has_quad = false;
        for (auto& [g, e] : fac.factors)
            if (g == parse_qpoly("16,-4,1")) has_quad = true;
        CHECK(has_quad);
    }
    {
        qpoly f = parse_qpoly("1,-3,0,1"); // x^3-3x+1
        CHECK(irreducible_mod_small_prime(f)); // oracle: irreducible mod 2
        auto fac = factor_poly_q(f);
        CHECK(fac.factors.size() == 1);
        CHECK(fac.factors[0].second == 1);
    }
    CHECK_THROWS_AS(factor_poly_q(qpoly()), std::domain_error);
}

TEST_CASE("factorization round-trip on random products of certified irreducibles") {
    std::mt19937_64 rng(2026);
    int built = 0;
    while (built < 120) {
        // build a pool of mod-p-certified irreducible monic factors
        std::vector<qpoly> pool;
        int total = 0;
        while (total < 24) {
            int d = 1 + (int)(rng() % 6);
            std::vector<Rational> c(d + 1);
            for (int i = 0; i < d; ++i) c[i] = (int64_t)(rng() % 21) - 10;
            c[d] = 1;
            qpoly cand(std::move(c));
            if (cand.degree() != d) continue;
            if (d > 1 && !irreducible_mod_small_prime(cand)) continue;
            bool dup = false;
            for (auto& g : pool) dup = dup || g == cand;
            if (dup) continue;
            pool.push_back(cand);
            total += d;
        }
        qpoly f = qpoly::constant(1);
        std::vector<std::pair<qpoly, unsigned>> truth;
        for (auto& g : pool) {
            unsigned e = 1 + (unsigned)(rng() % 2);
            truth.push_back({g, e});
            f = f * poly_pow(g, e);
        }
        auto fac = factor_poly_q(f);
        CHECK(reconstruct(fac) == f);
        std::sort(truth.begin(), truth.end(), [](const auto& a, const auto& b) {
            if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
            return a.first.c < b.first.c;
        });
        REQUIRE(fac.factors.size() == truth.size());
        for (size_t i = 0; i < truth.size(); ++i) {
            CHECK(fac.factors[i].first == truth[i].first);
            CHECK(fac.factors[i].second == truth[i].second);
        }
        ++built;
    }
}

TEST_CASE("cyclotomic data") {
    auto c1 = cyclotomic_data(1);
    CHECK(c1.phi_n == 1);
    CHECK(c1.poly == parse_qpoly("-1,1"));
    auto c9 = cyclotomic_data(9);
    CHECK(c9.phi_n == 6);
    CHECK(c9.poly == parse_qpoly("1,0,0,1,0,0,1")); // x^6+x^3+1
    CHECK(cyclotomic_data(11).phi_n == 10);
    CHECK_THROWS_AS(cyclotomic_data(0), std::domain_error);

    for (uint64_t n = 1; n <= 200; ++n) {
        auto cd = cyclotomic_data(n);
        CHECK((uint64_t)cd.poly.degree() == cd.phi_n);
        // divides x^n - 1 and no x^d - 1 for proper divisors d
        std::vector<Rational> xn(n + 1);
        xn[0] = -1;
        xn[n] = 1;
        CHECK((qpoly(std::move(xn)) % cd.poly).is_zero());
        if (n > 1) {
            for (uint64_t d = 1; d < n; ++d) {
                if (n % d) continue;
                std::vector<Rational> xd(d + 1);
                xd[0] = -1;
                xd[d] = 1;
                CHECK(!(qpoly(std::move(xd)) % cd.poly).is_zero());
            }
        }
        // Phi_n(1) = p for prime powers, else 1 (n > 1)
        if (n > 1) {
            Rational v = eval(cd.poly, Rational(1));
            auto fs = factor_integer(Integer(n));
            if (fs.size() == 1)
                CHECK(v == Rational(fs[0].first));
            else
                CHECK(v == 1);
        }
    }
}

TEST_CASE("squarefree decomposition and primality utilities") {
    qpoly f = poly_pow(parse_qpoly("1,1"), 3) * parse_qpoly("-2,0,1");
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == parse_qpoly("-2,0,1"));
    CHECK(sq[0].second == 1);
    CHECK(sq[1].first == parse_qpoly("1,1"));
    CHECK(sq[1].second == 3);

    CHECK(is_prime(Integer("1000000007")));
    CHECK(!is_prime(Integer("1000000008")));
    CHECK(is_prime(Integer("170141183460469231731687303715884105727"))); // 2^127-1
}
