#ifndef PXCAYLEY_CAYLEY_HPP
#define PXCAYLEY_CAYLEY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "pxcayley/cyclofactor.hpp"
#include "pxcayley/gf2poly.hpp"

namespace pxcayley {

// k = sum over d | b of coefficients[d] * omega(d), with
// 0 <= coefficients[d] <= capacity(d) from the profile.
struct AlphaDecomposition {
  DegreeProfile context;
  std::map<int, int> coefficients;  // one entry per divisor d of b
};

enum class Method { polynomial, arithmetic, bruteforce };

std::string to_string(Method m);

// Decision record; witness is present exactly when cayley is true, and then
// divides t^n+1 with degree n-k.
struct CayleyVerdict {
  int n = 0;
  int k = 0;
  bool cayley = false;
  std::optional<Gf2Poly> witness;
  Method method = Method::polynomial;
};

// Data for the (ii) => (i) construction: u, v palindromic of degree n-k and
//   t^n+1 = f1^2 u + t g1^2 v = f2^2 v + t g2^2 u.
// The identity and the shape constraints are checked at construction.
class ProofInstance {
 public:
  ProofInstance(int n, int k, Gf2Poly u, Gf2Poly v, Gf2Poly f1, Gf2Poly g1,
                Gf2Poly f2, Gf2Poly g2);

  int n() const { return n_; }
  int k() const { return k_; }
  const Gf2Poly& u() const { return u_; }
  const Gf2Poly& v() const { return v_; }
  const Gf2Poly& f1() const { return f1_; }
  const Gf2Poly& g1() const { return g1_; }
  const Gf2Poly& f2() const { return f2_; }
  const Gf2Poly& g2() const { return g2_; }

 private:
  int n_;
  int k_;
  Gf2Poly u_, v_, f1_, g1_, f2_, g2_;
};

// All degrees of monic divisors of t^n+1, by bounded-count knapsack over the
// degree profile (never by enumerating divisors). Contains 0 and n and is
// closed under d -> n-d.
std::set<int> divisor_degree_set(int n);

// Theorem route: PX(n,k) is Cayley iff t^n+1 has a divisor of degree n-k.
// Requires n >= 3 and 1 <= k <= n-1.
bool is_cayley(int n, int k);

// Corollary route: a decomposition of k when one exists, chosen by greedily
// maximizing alpha_d for the largest d first; absent iff not Cayley.
std::optional<AlphaDecomposition> alpha_decomposition(int n, int k);

// Deterministic monic divisor of t^n+1 with degree n-k, assembled from the
// factorization along the knapsack reconstruction and verified by division
// before returning. Throws NotCayleyError when PX(n,k) is not Cayley.
Gf2Poly witness_divisor(int n, int k);

// s = u_e v_e + t u_o v_o; guarantees deg s = n-k and s | t^n+1.
Gf2Poly construct_s(const ProofInstance& inst);

// The even/odd-part identities behind the construction, in cleared
// (multiplicative) form; true exactly when all of them hold:
//   f1 u_e + t g1 v_o = t^m+1     f2 v_e + t g2 u_o = t^m+1
//   f1 u_o = g1 v_e               f2 v_o = g2 u_e
//   f1 s = (t^m+1) v_e            g1 s = (t^m+1) u_o
//   f2 s = (t^m+1) u_e            g2 s = (t^m+1) v_o
bool verify_proof_identities(const ProofInstance& inst, const Gf2Poly& s);

}  // namespace pxcayley

#endif
