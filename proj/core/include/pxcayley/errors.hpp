#ifndef PXCAYLEY_ERRORS_HPP
#define PXCAYLEY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pxcayley {

// Malformed polynomial text. `position` is the 0-based offset of the first
// offending character in the original input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A witness divisor was requested for a pair (n,k) that is not Cayley.
class NotCayleyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ProofInstance whose defining identity or shape constraints fail.
class InvalidInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex caps and search budgets. `exhausted()` tells a search that ran out
// of budget (result unknown) apart from an input refused up front.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what, bool exhausted = false)
      : std::runtime_error(what), exhausted_(exhausted) {}
  bool exhausted() const noexcept { return exhausted_; }

 private:
  bool exhausted_;
};

// Census cross-check failure; carries the smallest reproducing pair.
class OracleDisagreementError : public std::runtime_error {
 public:
  OracleDisagreementError(const std::string& what, int n, int k)
      : std::runtime_error(what), n_(n), k_(k) {}
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

 private:
  int n_;
  int k_;
};

}  // namespace pxcayley

#endif
