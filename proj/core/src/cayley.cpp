#include "pxcayley/cayley.hpp"

#include <stdexcept>
#include <string>

#include "pxcayley/errors.hpp"

namespace pxcayley {

std::string to_string(Method m) {
  switch (m) {
    case Method::polynomial: return "polynomial";
    case Method::arithmetic: return "arithmetic";
    case Method::bruteforce: return "bruteforce";
  }
  return "unknown";
}

namespace {

void check_px_range(int n, int k) {
  if (n < 3)
    throw std::domain_error("n must be >= 3 (got n=" + std::to_string(n) + ")");
  if (k < 1 || k > n - 1)
    throw std::domain_error("k must satisfy 1 <= k <= n-1 (got k=" +
                            std::to_string(k) + " for n=" + std::to_string(n) + ")");
}

// reach[i][x]: x is a sum of entry weights omega(d) over the first i profile
// entries, each used within its capacity. reach[0] covers only 0.
struct ReachTables {
  DegreeProfile profile;
  std::vector<std::vector<char>> reach;
};

ReachTables compute_reach(int n) {
  ReachTables t;
  t.profile = degree_profile(n);
  const auto& entries = t.profile.entries;
  t.reach.assign(entries.size() + 1, std::vector<char>(n + 1, 0));
  t.reach[0][0] = 1;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int w = entries[i].omega;
    const int cap = entries[i].capacity;
    const auto& prev = t.reach[i];
    auto& next = t.reach[i + 1];
    // Bounded-count knapsack in O(n) per entry: walk each residue class
    // mod w tracking the number of w-steps since the last reachable prefix.
    for (int r = 0; r < w && r <= n; ++r) {
      int since = cap + 1;
      for (int x = r; x <= n; x += w) {
        if (prev[x])
          since = 0;
        else if (since <= cap)
          ++since;
        next[x] = since <= cap;
      }
    }
  }
  return t;
}

// Largest-d-first greedy reconstruction of target as sum alpha_d * omega(d).
// Defined whenever reach[last][target] holds.
std::map<int, int> reconstruct_alphas(const ReachTables& t, int target) {
  std::map<int, int> alphas;
  int rem = target;
  const auto& entries = t.profile.entries;
  for (std::size_t i = entries.size(); i-- > 0;) {
    const int w = entries[i].omega;
    const int cap = entries[i].capacity;
    int chosen = -1;
    for (int c = std::min(cap, rem / w); c >= 0; --c) {
      if (t.reach[i][rem - c * w]) {
        chosen = c;
        break;
      }
    }
    if (chosen < 0)
      throw std::logic_error("reconstruction failed for a reachable target");
    alphas[entries[i].d] = chosen;
    rem -= chosen * w;
  }
  if (rem != 0)
    throw std::logic_error("reconstruction left a nonzero remainder");
  return alphas;
}

}  // namespace

std::set<int> divisor_degree_set(int n) {
  const ReachTables t = compute_reach(n);
  std::set<int> degrees;
  const auto& last = t.reach.back();
  for (int x = 0; x <= n; ++x) {
    if (last[x]) degrees.insert(x);
  }
  return degrees;
}

bool is_cayley(int n, int k) {
  check_px_range(n, k);
  const ReachTables t = compute_reach(n);
  return t.reach.back()[n - k] != 0;
}

std::optional<AlphaDecomposition> alpha_decomposition(int n, int k) {
  check_px_range(n, k);
  const ReachTables t = compute_reach(n);
  // k is reachable iff n-k is (divisor degrees pair up with cofactors), so
  // this agrees with the Theorem-route predicate.
  if (!t.reach.back()[k]) return std::nullopt;
  AlphaDecomposition alpha;
  alpha.coefficients = reconstruct_alphas(t, k);
  alpha.context = t.profile;
  return alpha;
}

Gf2Poly witness_divisor(int n, int k) {
  check_px_range(n, k);
  const ReachTables t = compute_reach(n);
  const int target = n - k;
  if (!t.reach.back()[target])
    throw NotCayleyError("PX(" + std::to_string(n) + "," + std::to_string(k) +
                         ") is not Cayley: t^n+1 has no divisor of degree n-k");
  const std::map<int, int> alphas = reconstruct_alphas(t, target);

  const FactorMultiset factors = factor_xn_plus_1(n);
  // Factors belonging to divisor d are exactly those whose roots have order
  // d, i.e. the least e | b with t^e == 1 (mod factor) is d.
  std::map<int, std::vector<std::size_t>> by_divisor;
  const std::vector<int> divs = divisors_of(t.profile.b);
  for (std::size_t idx = 0; idx < factors.factors.size(); ++idx) {
    const Gf2Poly& g = factors.factors[idx].poly;
    for (int e : divs) {
      if (pow_t_mod(e, g).is_one()) {
        by_divisor[e].push_back(idx);
        break;
      }
    }
  }

  Gf2Poly s = Gf2Poly::one();
  for (const auto& [d, want] : alphas) {
    int remaining = want;
    for (std::size_t idx : by_divisor[d]) {
      if (remaining == 0) break;
      const auto& rec = factors.factors[idx];
      const int copies = std::min(remaining, rec.multiplicity);
      for (int c = 0; c < copies; ++c) s = mul(s, rec.poly);
      remaining -= copies;
    }
    if (remaining != 0)
      throw std::logic_error("factor capacities inconsistent with profile");
  }

  if (s.degree() != target)
    throw std::logic_error("witness degree mismatch");
  if (!divrem(Gf2Poly::xn_plus_one(n), s).second.is_zero())
    throw std::logic_error("witness does not divide t^n+1");
  return s;
}

ProofInstance::ProofInstance(int n, int k, Gf2Poly u, Gf2Poly v, Gf2Poly f1,
                             Gf2Poly g1, Gf2Poly f2, Gf2Poly g2)
    : n_(n),
      k_(k),
      u_(std::move(u)),
      v_(std::move(v)),
      f1_(std::move(f1)),
      g1_(std::move(g1)),
      f2_(std::move(f2)),
      g2_(std::move(g2)) {
  if (n_ < 2 || n_ % 2 != 0)
    throw std::domain_error("ProofInstance requires even n >= 2 (got n=" +
                            std::to_string(n_) + ")");
  if (k_ < 0 || k_ > n_)
    throw std::domain_error("ProofInstance requires 0 <= k <= n");
  const int d = n_ - k_;
  if (u_.degree() != d || v_.degree() != d)
    throw InvalidInstanceError("u and v must have degree n-k");
  if (!is_palindromic(u_) || !is_palindromic(v_))
    throw InvalidInstanceError("u and v must be palindromic");
  const Gf2Poly xn = Gf2Poly::xn_plus_one(n_);
  const Gf2Poly tt = Gf2Poly::t();
  const Gf2Poly lhs1 = add(mul(square(f1_), u_), mul(mul(tt, square(g1_)), v_));
  const Gf2Poly lhs2 = add(mul(square(f2_), v_), mul(mul(tt, square(g2_)), u_));
  if (lhs1 != xn || lhs2 != xn)
    throw InvalidInstanceError(
        "equation t^n+1 = f1^2 u + t g1^2 v = f2^2 v + t g2^2 u fails");
}

Gf2Poly construct_s(const ProofInstance& inst) {
  const auto [ue, uo] = even_odd_split(inst.u());
  const auto [ve, vo] = even_odd_split(inst.v());
  const Gf2Poly s =
      add(mul(ue, ve), mul(Gf2Poly::t(), mul(uo, vo)));
  // Both guarantees follow from the instance invariants; a failure here
  // would be a construction bug, not bad input.
  if (s.degree() != inst.n() - inst.k())
    throw std::logic_error("construct_s degree mismatch");
  if (!divrem(Gf2Poly::xn_plus_one(inst.n()), s).second.is_zero())
    throw std::logic_error("construct_s result does not divide t^n+1");
  return s;
}

bool verify_proof_identities(const ProofInstance& inst, const Gf2Poly& s) {
  const int m = inst.n() / 2;
  const Gf2Poly tm1 = Gf2Poly::xn_plus_one(m);
  const Gf2Poly tt = Gf2Poly::t();
  const auto [ue, uo] = even_odd_split(inst.u());
  const auto [ve, vo] = even_odd_split(inst.v());
  const auto& f1 = inst.f1();
  const auto& g1 = inst.g1();
  const auto& f2 = inst.f2();
  const auto& g2 = inst.g2();
  return add(mul(f1, ue), mul(tt, mul(g1, vo))) == tm1 &&
         add(mul(f2, ve), mul(tt, mul(g2, uo))) == tm1 &&
         mul(f1, uo) == mul(g1, ve) &&
         mul(f2, vo) == mul(g2, ue) &&
         mul(f1, s) == mul(tm1, ve) &&
         mul(g1, s) == mul(tm1, uo) &&
         mul(f2, s) == mul(tm1, ue) &&
         mul(g2, s) == mul(tm1, vo);
}

}  // namespace pxcayley
