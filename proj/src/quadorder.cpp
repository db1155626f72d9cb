#include "cmtor/quadorder.hpp"

#include <fstream>
#include <sstream>

namespace cmtor {

discriminant decompose(const Integer& delta) {
    if (delta >= 0) throw std::domain_error("not an imaginary quadratic discriminant");
    Integer m = ((delta % 4) + 4) % 4;
    if (m != 0 && m != 1) throw std::domain_error("not an imaginary quadratic discriminant");

    discriminant d;
    d.delta = delta;

    // fundamental part / conductor from the factorization of |delta|
    auto fs = factor_integer(delta);
    Integer f = 1;
    for (auto& [p, e] : fs) {
        if (p == 2) continue;
        f *= ipow(p, e / 2);
    }
    // largest odd square divisor is f^2 so far; now the 2-part
    Integer rest = delta / (f * f); // still = 0,1 mod 4? not necessarily; fix 2-part below
    while (true) {
        Integer r4 = ((rest % 4) + 4) % 4;
        if (r4 == 0) {
            Integer q = rest / 4;
            Integer q4 = ((q % 4) + 4) % 4;
            if (q4 == 0 || q4 == 1) {
                rest = q;
                f *= 2;
                continue;
            }
        }
        break;
    }
    d.fundamental = rest;
    d.conductor = f;

    // r = distinct odd primes dividing delta
    int r = 0;
    for (auto& [p, e] : fs)
        if (p != 2) ++r;
    d.odd_prime_count = r;

    // genus case table
    Integer m16 = ((delta % 16) + 16) % 16;
    Integer m32 = ((delta % 32) + 32) % 32;
    if (m == 1 || m16 == 4)
        d.nu = r - 1;
    else if (m16 == 8 || m16 == 12 || m32 == 16)
        d.nu = r;
    else if (m32 == 0)
        d.nu = r + 1;
    else
        throw std::runtime_error("genus case table fell through");
    if (d.nu < 0) d.nu = 0; // delta = -4, -8, -16: r = 0 rows of the table

    d.unit_count = (d.fundamental == -3) ? 6 : (d.fundamental == -4) ? 4 : 2;
    return d;
}

namespace {

std::mutex g_cache_mutex;
std::map<Integer, Integer> g_class_cache;

Integer count_reduced_forms(const Integer& delta) {
    // forms (a,b,c), b^2 - 4ac = delta, |b| <= a <= c, gcd = 1,
    // b >= 0 when |b| = a or a = c
    Integer count = 0;
    Integer alim = isqrt(-delta / 3);
    for (Integer a = 1; a <= alim; ++a) {
        Integer bstart = (delta % 2 == 0) ? 0 : 1;
        for (Integer b = bstart; b <= a; b += 2) {
            Integer num = b * b - delta;
            if (num % (4 * a) != 0) continue;
            Integer c = num / (4 * a);
            if (c < a) continue;
            if (igcd(igcd(a, b), c) != 1) continue;
            // (a, b, c) reduced; count (a, -b, c) too unless b=0, a=b or a=c
            count += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return count;
}

} // namespace

Integer class_number(const Integer& delta) {
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = g_class_cache.find(delta);
        if (it != g_class_cache.end()) return it->second;
    }
    discriminant d = decompose(delta); // validates
    Integer h = count_reduced_forms(d.delta);
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        g_class_cache.emplace(delta, h);
    }
    return h;
}

Integer class_number(const discriminant& d) { return class_number(d.delta); }

Integer two_torsion_class_count(const discriminant& d) {
    Integer delta = d.delta;
    Integer count = 0;
    Integer alim = isqrt(-delta / 3);
    for (Integer a = 1; a <= alim; ++a) {
        Integer bstart = (delta % 2 == 0) ? 0 : 1;
        for (Integer b = bstart; b <= a; b += 2) {
            Integer num = b * b - delta;
            if (num % (4 * a) != 0) continue;
            Integer c = num / (4 * a);
            if (c < a) continue;
            if (igcd(igcd(a, b), c) != 1) continue;
            if (b == 0 || b == a || a == c) ++count;
        }
    }
    return count;
}

Integer class_number_dirichlet(const Integer& delta) {
    if (delta >= -4) throw std::domain_error("class_number_dirichlet needs delta < -4");
    discriminant d = decompose(delta);
    if (d.conductor != 1) throw std::domain_error("class_number_dirichlet needs a fundamental discriminant");
    Integer s = 0;
    Integer D = -delta;
    for (Integer a = 1; a < D; ++a) s += a * kronecker(delta, a);
    Integer h = iabs(s) / D;
    return h;
}

std::string real_ideal::basis_first() const {
    std::ostringstream os;
    os << a;
    return os.str();
}

std::string real_ideal::basis_second(const Integer& delta) const {
    std::ostringstream os;
    if (kind == 1)
        os << "sqrt(" << delta << ")/2";
    else
        os << "(" << a << "+sqrt(" << delta << "))/2";
    return os.str();
}

std::vector<real_ideal> real_primitive_ideals(const discriminant& d) {
    std::vector<real_ideal> out;
    Integer D = -d.delta;
    std::vector<Integer> divisors;
    for (Integer a = 1; a * a <= D; ++a) {
        if (D % a) continue;
        divisors.push_back(a);
        if (a != D / a) divisors.push_back(D / a);
    }
    std::sort(divisors.begin(), divisors.end());
    bool odd = (((d.delta % 2) + 2) % 2) == 1;
    for (const Integer& a : divisors) {
        if (!odd) { // kind 1 requires 4a | delta
            if (d.delta % (4 * a) == 0) {
                Integer q = d.delta / (4 * a);
                if (igcd(a, iabs(q)) == 1) out.push_back({1, a});
            }
        }
        // kind 2: 4a | a^2 - delta
        Integer num = a * a - d.delta;
        if (num % (4 * a) == 0) {
            Integer q = num / (4 * a);
            if (igcd(a, q) == 1) out.push_back({2, a});
        }
    }
    std::sort(out.begin(), out.end(), [](const real_ideal& x, const real_ideal& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        return x.a < y.a;
    });
    return out;
}

namespace {

// units of O_K as (x, y) with u = x + y*omega, omega = (deltaK + sqrt(deltaK))/2;
// only the six-or-fewer roots of unity appear
std::vector<std::pair<Integer, Integer>> unit_list(const Integer& deltaK) {
    // omega satisfies omega^2 - deltaK*omega + (deltaK^2-deltaK)/4 = 0
    if (deltaK == -4) {
        // i = (4 + 2*sqrt(-4))/4... use direct coordinates: sqrt(-1) = (2*omega - deltaK)/2
        // omega = (-4 + sqrt(-4))/2 = -2 + i, so i = omega + 2
        return {{1, 0}, {-1, 0}, {2, 1}, {-2, -1}};
    }
    if (deltaK == -3) {
        // omega = (-3 + sqrt(-3))/2 = zeta3 - ... : zeta6 = (1+sqrt(-3))/2 = omega + 2
        // units: +-1, +-(omega+2), +-(omega+2)^2 = +-(omega+1)
        return {{1, 0}, {-1, 0}, {2, 1}, {-2, -1}, {1, 1}, {-1, -1}};
    }
    return {{1, 0}, {-1, 0}};
}

// is u = x + y*omega congruent to 1 mod N*O_K, i.e. N | (x-1) and N | y
bool unit_is_one_mod(const std::pair<Integer, Integer>& u, const Integer& N) {
    return (u.first - 1) % N == 0 && u.second % N == 0;
}

} // namespace

Integer ray_class_degree(const Integer& deltaK, const Integer& N, char over) {
    if (N <= 0) throw std::domain_error("ray_class_degree: N must be >= 1");
    discriminant d = decompose(deltaK);
    if (d.conductor != 1) throw std::domain_error("ray_class_degree needs a fundamental discriminant");
    Integer h = class_number(d);
    if (N == 1) return over == 'Q' ? 2 * h : h;

    // unit index [U : U_m] by explicit reduction of the at-most-six units
    auto units = unit_list(deltaK);
    int um = 0;
    for (auto& u : units)
        if (unit_is_one_mod(u, N)) ++um;
    Integer unit_index = Integer((int)units.size() / um);

    // h/[U:U_m] * N(m) * prod over p | N of local factors from the splitting
    Integer numer = h * N * N;
    Integer denomv = unit_index;
    for (auto& [p, e] : factor_integer(N)) {
        int chi = kronecker(deltaK, p);
        if (chi == 1) {
            // split: two primes of norm p
            numer *= (p - 1) * (p - 1);
            denomv *= p * p;
        } else if (chi == 0) {
            // ramified: one prime of norm p
            numer *= (p - 1);
            denomv *= p;
        } else {
            // inert: one prime of norm p^2
            numer *= (p * p - 1);
            denomv *= p * p;
        }
    }
    if (numer % denomv != 0) throw std::runtime_error("ray_class_degree: non-integral result");
    Integer deg = numer / denomv;
    return over == 'Q' ? 2 * deg : deg;
}

Integer cartan_unit_order(const discriminant& d, const Integer& N) {
    if (N <= 0) throw std::domain_error("cartan_unit_order: N must be >= 1");
    Integer out = 1;
    for (auto& [p, e] : factor_integer(N)) {
        int chi = kronecker(d.delta, p);
        // p^(2e-2) * (p - 1) * (p - chi)
        out *= ipow(p, 2 * e - 2) * (p - 1) * (p - chi);
    }
    return out;
}

real_ideal special_prime_ideal(const discriminant& d, const Integer& ell) {
    if (!is_prime(ell)) throw std::domain_error("special_prime_ideal: ell must be prime");
    if (d.delta % ell != 0) throw std::domain_error("special_prime_ideal: ell must divide delta");
    Integer b = special_prime_ideal_b(d, ell);
    return {b == 0 ? 1 : 2, ell};
}

Integer special_prime_ideal_b(const discriminant& d, const Integer& ell) {
    if (d.delta % ell != 0) throw std::domain_error("special_prime_ideal: ell must divide delta");
    // enumerate b with b^2 = delta mod 4*ell, 0 <= b < 2*ell; the index-ell
    // sublattice [ell, (b+sqrt(delta))/2] closed under the order action
    std::vector<Integer> found;
    for (Integer b = 0; b < 2 * ell; ++b) {
        if (((b * b - d.delta) % (4 * ell)) == 0) found.push_back(b);
    }
    if (found.size() != 1)
        throw std::runtime_error("special_prime_ideal: expected a unique index-ell ideal");
    return found[0];
}

void class_number_cache_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string ds, hs;
        if (!(ls >> ds >> hs)) continue;
        try {
            g_class_cache.emplace(Integer(ds), Integer(hs));
        } catch (...) {
        }
    }
}

void class_number_cache_save(const std::string& path) {
    std::vector<std::pair<Integer, Integer>> rows;
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        rows.assign(g_class_cache.begin(), g_class_cache.end());
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return iabs(a.first) < iabs(b.first); });
    std::ofstream out(path);
    for (auto& [delta, h] : rows) out << delta << " " << h << "\n";
}

} // namespace cmtor
