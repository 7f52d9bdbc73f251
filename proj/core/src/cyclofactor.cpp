#include "pxcayley/cyclofactor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pxcayley {

TwoAdicSplit two_adic_split(int n) {
  if (n < 1) throw std::domain_error("two_adic_split requires n >= 1");
  TwoAdicSplit s;
  s.n = n;
  s.a = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++s.a;
  }
  s.b = n;
  return s;
}

int multiplicative_order(int d) {
  if (d < 1) throw std::domain_error("multiplicative_order requires d >= 1");
  if (d % 2 == 0)
    throw std::domain_error("multiplicative_order requires odd d (2 is not invertible)");
  if (d == 1) return 1;
  int c = 1;
  long long pow2 = 2 % d;
  while (pow2 != 1) {
    pow2 = (pow2 * 2) % d;
    ++c;
  }
  return c;
}

int euler_phi(int d) {
  if (d < 1) throw std::domain_error("euler_phi requires d >= 1");
  int phi = d;
  int m = d;
  for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
    if (m % p != 0) continue;
    phi -= phi / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

std::vector<std::vector<int>> cyclotomic_cosets(int b) {
  if (b < 1) throw std::domain_error("cyclotomic_cosets requires b >= 1");
  if (b % 2 == 0) throw std::domain_error("cyclotomic_cosets requires odd b");
  std::vector<bool> seen(b, false);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < b; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    int y = x;
    do {
      seen[y] = true;
      orbit.push_back(y);
      y = static_cast<int>((2LL * y) % b);
    } while (y != x);
    std::sort(orbit.begin(), orbit.end());
    cosets.push_back(std::move(orbit));
  }
  return cosets;
}

std::vector<int> divisors_of(int m) {
  if (m < 1) throw std::domain_error("divisors_of requires m >= 1");
  std::vector<int> divs;
  for (int d = 1; static_cast<long long>(d) * d <= m; ++d) {
    if (m % d != 0) continue;
    divs.push_back(d);
    if (d != m / d) divs.push_back(m / d);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

DegreeProfile degree_profile(int n) {
  const TwoAdicSplit split = two_adic_split(n);
  DegreeProfile profile;
  profile.n = n;
  profile.a = split.a;
  profile.b = split.b;
  const int pow2a = 1 << split.a;
  for (int d : divisors_of(split.b)) {
    DegreeProfileEntry e;
    e.d = d;
    e.omega = multiplicative_order(d);
    e.phi = euler_phi(d);
    assert(e.phi % e.omega == 0);
    e.count = e.phi / e.omega;
    e.capacity = pow2a * e.count;
    profile.entries.push_back(e);
  }
  return profile;
}

Gf2Poly pow_t_mod(long long e, const Gf2Poly& g) {
  if (g.is_zero()) throw std::domain_error("pow_t_mod modulus is zero");
  Gf2Poly result = Gf2Poly::one() % g;
  Gf2Poly base = Gf2Poly::t() % g;
  while (e > 0) {
    if (e & 1) result = mul(result, base) % g;
    base = square(base) % g;
    e >>= 1;
  }
  return result;
}

namespace {

std::vector<int> prime_factors(int m) {
  std::vector<int> primes;
  for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
    if (m % p != 0) continue;
    primes.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

// t^(2^count) mod g by repeated Frobenius squaring of x.
Gf2Poly iterate_frobenius(Gf2Poly x, int count, const Gf2Poly& g) {
  for (int i = 0; i < count; ++i) x = square(x) % g;
  return x;
}

}  // namespace

bool is_irreducible(const Gf2Poly& p) {
  if (p.is_zero()) throw std::domain_error("is_irreducible on the zero polynomial");
  const int r = p.degree();
  if (r < 1) return false;
  const Gf2Poly t_mod = Gf2Poly::t() % p;
  // Rabin: t^(2^r) == t mod p, and for every prime q | r the map
  // t -> t^(2^(r/q)) fixes no proper subfield worth of roots.
  if (iterate_frobenius(t_mod, r, p) != t_mod) return false;
  for (int q : prime_factors(r)) {
    const Gf2Poly x = iterate_frobenius(t_mod, r / q, p);
    if (!gcd(add(x, t_mod), p).is_one()) return false;
  }
  return true;
}

FactorMultiset factor_xn_plus_1(int n) {
  const TwoAdicSplit split = two_adic_split(n);
  const int b = split.b;
  const Gf2Poly target = Gf2Poly::xn_plus_one(b);

  // Berlekamp subalgebra of GF(2)[t]/(t^b+1): the Frobenius matrix of
  // t^b+1 is the permutation i -> 2i mod b, so the null space of Q - I is
  // spanned by the indicator vectors of the cyclotomic cosets.
  const auto cosets = cyclotomic_cosets(b);
  std::vector<Gf2Poly> basis;
  for (const auto& coset : cosets) {
    if (coset.size() == 1 && coset[0] == 0) continue;  // the constant vector
    Gf2Poly v;
    for (int i : coset) v.set_coeff(i, true);
    basis.push_back(std::move(v));
  }

  std::vector<Gf2Poly> factors = {target};
  const std::size_t want = cosets.size();
  for (const auto& v : basis) {
    if (factors.size() == want) break;
    std::vector<Gf2Poly> next;
    for (const auto& g : factors) {
      if (g.degree() <= 1) {
        next.push_back(g);
        continue;
      }
      const Gf2Poly w = v % g;
      const Gf2Poly g1 = w.is_zero() ? g : gcd(g, w);
      if (g1.is_one() || g1.degree() == g.degree()) {
        next.push_back(g);
        continue;
      }
      // v is idempotent mod t^b+1, so g splits exactly as g1 * g/g1.
      next.push_back(g1);
      next.push_back(divrem(g, g1).first);
    }
    factors = std::move(next);
  }
  if (factors.size() != want)
    throw std::logic_error("Berlekamp splitting did not separate all factors");

  std::sort(factors.begin(), factors.end());
  FactorMultiset result;
  const int multiplicity = 1 << split.a;
  for (auto& g : factors)
    result.factors.push_back({std::move(g), multiplicity});
  return result;
}

std::vector<std::pair<std::string, int>> to_term_pairs(const FactorMultiset& f) {
  std::vector<std::pair<std::string, int>> pairs;
  pairs.reserve(f.factors.size());
  for (const auto& rec : f.factors)
    pairs.emplace_back(format(rec.poly), rec.multiplicity);
  return pairs;
}

}  // namespace pxcayley
