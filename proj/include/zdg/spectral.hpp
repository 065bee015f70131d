#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zdg/graph.hpp"

namespace zdg {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

// Dense polynomial over Z, coefficients stored in ascending order.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial monomial(std::size_t degree);
  // x - root
  static IntPolynomial linear(const BigInt& root);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coefficient(std::size_t i) const {
    return i < c_.size() ? c_[i] : BigInt(0);
  }
  BigInt evaluate(const BigInt& x) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(std::size_t e) const;
  bool operator==(const IntPolynomial&) const = default;

  // Quotient and remainder for a monic divisor.
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& d) const;
  // Quotient when d divides this exactly over Z (any nonzero leading term).
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& d) const;

  // "x^4-2x^3-21x^2-12x+24"
  std::string to_string() const;
  // Descending coefficient array; values outside int64 become strings.
  std::string to_json() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct QuotientMatrix {
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::size_t> sizes;
  std::vector<BlockKind> kinds;

  std::size_t dimension() const { return a.size(); }
  BigMatrix to_big() const;
  std::string to_json() const;
};

// a_ii = |V_i| - 1 on clique blocks (0 on independent and singleton blocks),
// a_ij = |V_j| when blocks i and j are fully joined, 0 when there are no edges
// between them. Throws MixedBlock when a block is neither a clique nor an
// independent set, NotEquitable when two blocks are partially joined.
QuotientMatrix equitable_quotient_matrix(const Graph& g, const Partition& p);

// det(xI - M) by Faddeev-LeVerrier with exact big-integer division.
IntPolynomial char_poly(const BigMatrix& m);
IntPolynomial char_poly(const QuotientMatrix& m);

// det(xI - A) for the adjacency matrix: Hessenberg reduction modulo word-size
// primes, combined by CRT until the modulus exceeds twice an a-priori
// coefficient bound.
IntPolynomial adjacency_char_poly(const Graph& g);

BigMatrix adjacency_matrix(const Graph& g);

// Fraction-free Gaussian elimination (Bareiss).
BigInt determinant(BigMatrix m);
std::size_t rank(BigMatrix m);

// n - rank(A - lambda I). Uses Bareiss rank up to `bareiss_limit` vertices;
// above it, the root multiplicity of lambda in the exact characteristic
// polynomial, which agrees because A is symmetric.
std::size_t eigenvalue_multiplicity(const Graph& g, std::int64_t lambda,
                                    std::size_t bareiss_limit = 80);

// p = x^m0 (x+1)^m1 q with q(0) != 0 and q(-1) != 0.
struct SpectralFactorization {
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  IntPolynomial rest;
};
SpectralFactorization factor_zero_minus_one(const IntPolynomial& p);

}  // namespace zdg
