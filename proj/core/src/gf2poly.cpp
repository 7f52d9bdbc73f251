#include "pxcayley/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "pxcayley/errors.hpp"

namespace pxcayley {

namespace {

constexpr int kWordBits = 64;
// Parser guard against absurd exponents blowing up memory.
constexpr int kMaxExponent = 1 << 20;

// Spread the 32 bits of x to the even bit positions of a 64-bit word.
std::uint64_t spread_bits(std::uint32_t x) {
  std::uint64_t v = x;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

// Gather the even bit positions of v into the low 32 bits.
std::uint64_t compress_even_bits(std::uint64_t v) {
  v &= 0x5555555555555555ULL;
  v = (v | (v >> 1)) & 0x3333333333333333ULL;
  v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v >> 4)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v >> 8)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v >> 16)) & 0x00000000FFFFFFFFULL;
  return v;
}

// acc ^= src << shift, in bits. acc must already be large enough.
void xor_shifted(std::vector<std::uint64_t>& acc,
                 const std::vector<std::uint64_t>& src, int shift) {
  const int word_off = shift / kWordBits;
  const int bit_off = shift % kWordBits;
  if (bit_off == 0) {
    for (std::size_t j = 0; j < src.size(); ++j) acc[word_off + j] ^= src[j];
    return;
  }
  std::uint64_t carry = 0;
  for (std::size_t j = 0; j < src.size(); ++j) {
    acc[word_off + j] ^= (src[j] << bit_off) | carry;
    carry = src[j] >> (kWordBits - bit_off);
  }
  if (carry != 0) acc[word_off + src.size()] ^= carry;
}

int degree_of_words(const std::vector<std::uint64_t>& w) {
  if (w.empty()) return Gf2Poly::kNegInfDegree;
  const int top = static_cast<int>(w.size()) - 1;
  return top * kWordBits + (kWordBits - 1 - std::countl_zero(w.back()));
}

}  // namespace

void Gf2Poly::canonicalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(int exponent) {
  if (exponent < 0) throw std::domain_error("monomial exponent must be >= 0");
  Gf2Poly p;
  p.words_.assign(exponent / kWordBits + 1, 0);
  p.words_.back() = std::uint64_t{1} << (exponent % kWordBits);
  return p;
}

Gf2Poly Gf2Poly::xn_plus_one(int n) {
  if (n < 1) throw std::domain_error("t^n+1 requires n >= 1");
  Gf2Poly p = monomial(n);
  p.words_[0] |= 1;
  return p;
}

int Gf2Poly::degree() const { return degree_of_words(words_); }

bool Gf2Poly::coeff(int i) const {
  if (i < 0) return false;
  const std::size_t w = static_cast<std::size_t>(i) / kWordBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kWordBits)) & 1;
}

void Gf2Poly::set_coeff(int i, bool value) {
  if (i < 0) throw std::domain_error("coefficient index must be >= 0");
  const std::size_t w = static_cast<std::size_t>(i) / kWordBits;
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (i % kWordBits);
  } else if (w < words_.size()) {
    words_[w] &= ~(std::uint64_t{1} << (i % kWordBits));
    canonicalize();
  }
}

int Gf2Poly::weight() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool Gf2Poly::operator<(const Gf2Poly& other) const {
  if (words_.size() != other.words_.size())
    return words_.size() < other.words_.size();
  for (std::size_t j = words_.size(); j-- > 0;) {
    if (words_[j] != other.words_[j]) return words_[j] < other.words_[j];
  }
  return false;
}

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q) {
  Gf2Poly r;
  const auto& a = p.words_.size() >= q.words_.size() ? p.words_ : q.words_;
  const auto& b = p.words_.size() >= q.words_.size() ? q.words_ : p.words_;
  r.words_ = a;
  for (std::size_t j = 0; j < b.size(); ++j) r.words_[j] ^= b[j];
  r.canonicalize();
  return r;
}

Gf2Poly mul(const Gf2Poly& p, const Gf2Poly& q) {
  if (p.is_zero() || q.is_zero()) return Gf2Poly::zero();
  Gf2Poly r;
  r.words_.assign(p.words_.size() + q.words_.size(), 0);
  for (std::size_t wi = 0; wi < p.words_.size(); ++wi) {
    std::uint64_t w = p.words_[wi];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      w &= w - 1;
      xor_shifted(r.words_, q.words_, static_cast<int>(wi) * kWordBits + bit);
    }
  }
  r.canonicalize();
  return r;
}

Gf2Poly square(const Gf2Poly& p) {
  Gf2Poly r;
  r.words_.assign(p.words_.size() * 2, 0);
  for (std::size_t j = 0; j < p.words_.size(); ++j) {
    r.words_[2 * j] = spread_bits(static_cast<std::uint32_t>(p.words_[j]));
    r.words_[2 * j + 1] =
        spread_bits(static_cast<std::uint32_t>(p.words_[j] >> 32));
  }
  r.canonicalize();
  return r;
}

std::pair<Gf2Poly, Gf2Poly> divrem(const Gf2Poly& p, const Gf2Poly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const int dd = d.degree();
  Gf2Poly quot;
  Gf2Poly rem = p;
  int rd = rem.degree();
  if (rd >= dd) quot.words_.assign((rd - dd) / kWordBits + 1, 0);
  while (rd >= dd) {
    const int shift = rd - dd;
    quot.words_[shift / kWordBits] |= std::uint64_t{1} << (shift % kWordBits);
    xor_shifted(rem.words_, d.words_, shift);
    rem.canonicalize();
    rd = rem.degree();
  }
  quot.canonicalize();
  return {std::move(quot), std::move(rem)};
}

Gf2Poly gcd(const Gf2Poly& p, const Gf2Poly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("gcd of two zero polynomials");
  Gf2Poly a = p;
  Gf2Poly b = q;
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::pair<Gf2Poly, Gf2Poly> even_odd_split(const Gf2Poly& p) {
  Gf2Poly even;
  Gf2Poly odd;
  const std::size_t half = (p.words_.size() + 1) / 2;
  even.words_.assign(half, 0);
  odd.words_.assign(half, 0);
  for (std::size_t j = 0; j < p.words_.size(); ++j) {
    const std::uint64_t e = compress_even_bits(p.words_[j]);
    const std::uint64_t o = compress_even_bits(p.words_[j] >> 1);
    if (j % 2 == 0) {
      even.words_[j / 2] |= e;
      odd.words_[j / 2] |= o;
    } else {
      even.words_[j / 2] |= e << 32;
      odd.words_[j / 2] |= o << 32;
    }
  }
  even.canonicalize();
  odd.canonicalize();
  return {std::move(even), std::move(odd)};
}

bool is_palindromic(const Gf2Poly& p) {
  const int d = p.degree();
  if (p.is_zero()) return true;
  for (int i = 0; i <= d / 2; ++i) {
    if (p.coeff(i) != p.coeff(d - i)) return false;
  }
  return true;
}

namespace {

Gf2Poly parse_bitstring(std::string_view text) {
  Gf2Poly p;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') p.set_coeff(static_cast<int>(i), true);
  }
  return p;
}

// `offset` maps positions in `text` back to the original input string.
Gf2Poly parse_terms(std::string_view text, std::size_t offset) {
  Gf2Poly p;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool expect_term = true;
  skip_ws();
  while (pos < text.size()) {
    if (expect_term) {
      const char c = text[pos];
      if (c == '0') {
        ++pos;
      } else if (c == '1') {
        p = add(p, Gf2Poly::one());
        ++pos;
      } else if (c == 't') {
        ++pos;
        int exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected exponent digits after '^'", offset + pos);
          exponent = 0;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            exponent = exponent * 10 + (text[pos] - '0');
            if (exponent > kMaxExponent)
              throw ParseError("exponent too large", offset + pos);
            ++pos;
          }
        }
        p = add(p, Gf2Poly::monomial(exponent));
      } else {
        throw ParseError(std::string("expected a term, got '") + c + "'",
                         offset + pos);
      }
      expect_term = false;
    } else {
      if (text[pos] != '+')
        throw ParseError(std::string("expected '+', got '") + text[pos] + "'",
                         offset + pos);
      ++pos;
      expect_term = true;
    }
    skip_ws();
  }
  if (expect_term) throw ParseError("dangling '+' at end of input", offset + pos);
  return p;
}

}  // namespace

Gf2Poly parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError("empty polynomial text", begin);
  const std::string_view body = text.substr(begin, end - begin);
  if (body.find_first_not_of("01") == std::string_view::npos)
    return parse_bitstring(body);
  return parse_terms(body, begin);
}

std::string format(const Gf2Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (!p.coeff(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 't';
    } else {
      out += "t^";
      out += std::to_string(i);
    }
  }
  return out;
}

}  // namespace pxcayley
