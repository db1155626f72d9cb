#ifndef CMTOR_QUADORDER_HPP
#define CMTOR_QUADORDER_HPP

#include "cmtor/numeric.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace cmtor {

// An imaginary quadratic discriminant with its fundamental/conductor split and
// genus invariants. delta = conductor^2 * fundamental, fundamental < 0.
struct discriminant {
    Integer delta;
    Integer fundamental;
    Integer conductor;
    int odd_prime_count = 0; // r = distinct odd primes dividing delta
    int nu = 0;              // Pic O(delta)[2] = (Z/2)^nu
    int unit_count = 2;      // w(K): 6 for -3, 4 for -4, else 2
};

// delta < 0 and delta = 0,1 mod 4; throws std::domain_error otherwise
discriminant decompose(const Integer& delta);

// number of reduced primitive forms of discriminant delta (exhaustive count,
// memoized; the memo also serves the Sophie Germain scanner)
Integer class_number(const discriminant& d);
Integer class_number(const Integer& delta);

// number of ambiguous reduced primitive forms (b=0, a=b or a=c); equals 2^nu
Integer two_torsion_class_count(const discriminant& d);

// independent class number via the Dirichlet formula h = w/(2|D|) |sum a*chi(a)|,
// fundamental discriminants < -4 only; used as the scanner's second path
Integer class_number_dirichlet(const Integer& delta_fund);

struct real_ideal {
    int kind;  // 1: [a, sqrt(D)/2];  2: [a, (a+sqrt(D))/2]
    Integer a; // index [O : I]
    std::string basis_first() const;
    std::string basis_second(const Integer& delta) const;
};

// all primitive proper real ideals of O(delta), both kinds, sorted
std::vector<real_ideal> real_primitive_ideals(const discriminant& d);

// [K^(N):K] (over == 'K') or [K^(N):Q] (over == 'Q') for the ray class field
// of modulus N*O_K; deltaK must be fundamental
Integer ray_class_degree(const Integer& deltaK, const Integer& N, char over);

// #(O/NO)^x = N^2 prod_{p|N} (1 - 1/p)(1 - (delta|p)/p)
Integer cartan_unit_order(const discriminant& d, const Integer& N);

// the unique index-ell ideal of O(delta) for a prime ell | delta, in the
// [a, (b+sqrt(D))/2] basis convention; self-conjugate
real_ideal special_prime_ideal(const discriminant& d, const Integer& ell);
Integer special_prime_ideal_b(const discriminant& d, const Integer& ell);

// class-number memo control (CM_TORSION_CACHE loading)
void class_number_cache_load(const std::string& path);
void class_number_cache_save(const std::string& path);

} // namespace cmtor

#endif
