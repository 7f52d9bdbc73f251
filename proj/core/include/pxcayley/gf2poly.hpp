#ifndef PXCAYLEY_GF2POLY_HPP
#define PXCAYLEY_GF2POLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pxcayley {

// Polynomial over GF(2). Coefficients are bit-packed least-significant-first
// into 64-bit words: bit i of the word sequence is the coefficient of t^i.
// Values are always canonical: no trailing zero words, so the zero polynomial
// is the empty word vector and the top stored bit of a nonzero value is 1.
class Gf2Poly {
 public:
  // Degree reported for the zero polynomial; compares strictly below every
  // attainable degree.
  static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

  Gf2Poly() = default;

  static Gf2Poly zero() { return Gf2Poly{}; }
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly t() { return monomial(1); }
  static Gf2Poly monomial(int exponent);
  // t^n + 1 for n >= 1.
  static Gf2Poly xn_plus_one(int n);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  int degree() const;
  // Coefficient of t^i; zero beyond the stored range.
  bool coeff(int i) const;
  void set_coeff(int i, bool value);
  // Number of nonzero coefficients.
  int weight() const;

  bool operator==(const Gf2Poly& other) const { return words_ == other.words_; }
  bool operator!=(const Gf2Poly& other) const { return words_ != other.words_; }
  // Total order: by degree, ties by coefficient bits read as an integer.
  bool operator<(const Gf2Poly& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  friend Gf2Poly add(const Gf2Poly&, const Gf2Poly&);
  friend Gf2Poly mul(const Gf2Poly&, const Gf2Poly&);
  friend Gf2Poly square(const Gf2Poly&);
  friend std::pair<Gf2Poly, Gf2Poly> divrem(const Gf2Poly&, const Gf2Poly&);
  friend std::pair<Gf2Poly, Gf2Poly> even_odd_split(const Gf2Poly&);

  void canonicalize();

  std::vector<std::uint64_t> words_;
};

// Coefficient-wise XOR.
Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q);
// Carry-less schoolbook product.
Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q);
// Frobenius square: bit i maps to bit 2i; equals mul(p, p).
Gf2Poly square(const Gf2Poly& p);
// Long division: p = d*q + r with deg r < deg d. Throws std::domain_error
// when d is zero.
std::pair<Gf2Poly, Gf2Poly> divrem(const Gf2Poly& p, const Gf2Poly& d);
// Euclidean gcd; gcd(p, 0) = p. Throws std::domain_error when both are zero.
Gf2Poly gcd(const Gf2Poly& p, const Gf2Poly& q);
// Unique decomposition p = e^2 + t*o^2: e gathers even-index coefficients
// (bit 2i -> bit i), o gathers odd-index ones (bit 2i+1 -> bit i).
std::pair<Gf2Poly, Gf2Poly> even_odd_split(const Gf2Poly& p);
// Coefficient sequence 0..deg equals its reversal; zero counts as palindromic.
bool is_palindromic(const Gf2Poly& p);

// Accepts either a bitstring over {0,1} (least-significant-first) or a term
// expression like "t^3+t+1"; "0" is the zero polynomial. Throws ParseError.
Gf2Poly parse(std::string_view text);
// Term expression with descending exponents, e.g. "t^4+t+1"; zero is "0".
std::string format(const Gf2Poly& p);

inline Gf2Poly operator+(const Gf2Poly& p, const Gf2Poly& q) { return add(p, q); }
inline Gf2Poly operator*(const Gf2Poly& p, const Gf2Poly& q) { return mul(p, q); }
inline Gf2Poly operator/(const Gf2Poly& p, const Gf2Poly& d) { return divrem(p, d).first; }
inline Gf2Poly operator%(const Gf2Poly& p, const Gf2Poly& d) { return divrem(p, d).second; }

}  // namespace pxcayley

#endif
