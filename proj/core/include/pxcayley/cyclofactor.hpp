#ifndef PXCAYLEY_CYCLOFACTOR_HPP
#define PXCAYLEY_CYCLOFACTOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "pxcayley/gf2poly.hpp"

namespace pxcayley {

// n = 2^a * b with b odd.
struct TwoAdicSplit {
  int a = 0;
  int b = 1;
  int n = 1;
};

// Per-divisor data for the odd part b of n: omega is the multiplicative
// order of 2 mod d, count = phi/omega is the number of distinct irreducible
// factors of degree omega contributed by d, capacity = 2^a * count is the
// total multiplicity available from them inside t^n+1.
struct DegreeProfileEntry {
  int d = 1;
  int omega = 1;
  int phi = 1;
  int count = 1;
  int capacity = 1;
};

struct DegreeProfile {
  int n = 1;
  int a = 0;
  int b = 1;
  std::vector<DegreeProfileEntry> entries;  // ascending by d
};

// Irreducible factors with multiplicities; factors are pairwise distinct and
// sorted by (degree, coefficient bits as an integer). The product of
// poly^multiplicity over all records equals the factored target.
struct FactorRecord {
  Gf2Poly poly;
  int multiplicity = 1;
};

struct FactorMultiset {
  std::vector<FactorRecord> factors;
};

TwoAdicSplit two_adic_split(int n);
// Smallest positive c with 2^c == 1 (mod d); omega(1) = 1. d must be odd.
int multiplicative_order(int d);
int euler_phi(int d);
// Orbits of x -> 2x mod b on {0..b-1}; each orbit ascending, orbits ordered
// by minimum element. b must be odd.
std::vector<std::vector<int>> cyclotomic_cosets(int b);
DegreeProfile degree_profile(int n);
// Rabin's finite-field test; throws std::domain_error on the zero polynomial.
bool is_irreducible(const Gf2Poly& p);
// Complete factorization of t^n+1 over GF(2): the squarefree part t^b+1 is
// split by the Berlekamp null-space method and every factor carries
// multiplicity 2^a.
FactorMultiset factor_xn_plus_1(int n);

// Documented serialization: (term expression, multiplicity) pairs in sort
// order.
std::vector<std::pair<std::string, int>> to_term_pairs(const FactorMultiset& f);

// Ascending divisors of m.
std::vector<int> divisors_of(int m);
// t^e mod g, e >= 0.
Gf2Poly pow_t_mod(long long e, const Gf2Poly& g);

}  // namespace pxcayley

#endif
