#pragma once

// Exact integer Laurent-polynomial arithmetic, Alexander polynomials and
// torsion coefficients of torus knots, and the closed forms for twist knots.

#include <map>
#include <string>
#include <utility>

#include "concord/errors.hpp"
#include "concord/rational.hpp"

namespace concord {

// Laurent polynomial over Z. Zero coefficients are never stored, so
// structural equality is polynomial equality.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Int& constant);

  static LaurentPolynomial monomial(long exponent, const Int& coefficient);

  const std::map<long, Int>& coefficients() const { return coeffs_; }
  Int coeff(long exponent) const;
  void set_coeff(long exponent, const Int& value);

  bool is_zero() const { return coeffs_.empty(); }
  long min_exponent() const;  // requires nonzero
  long max_exponent() const;  // requires nonzero

  bool is_symmetric() const;  // coeff(e) == coeff(-e) for all e

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial& o) const { return coeffs_ == o.coeffs_; }

  LaurentPolynomial shifted(long delta) const;  // multiply by t^delta

  // Exact division; aborts via Error if the remainder is nonzero.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  Int evaluate_at_one() const;

  // d/dt, as a Laurent polynomial (exponent e contributes e*c * t^(e-1)).
  LaurentPolynomial derivative() const;

  std::string to_string() const;  // descending exponents, e.g. "t^2 - t + 1"

 private:
  std::map<long, Int> coeffs_;
};

struct TorusKnot {
  long a = 1;
  long b = 1;

  // Normalizes to a <= b and checks gcd(a,b) = 1.
  TorusKnot(long a_, long b_);
  bool is_unknot() const { return a == 1; }
};

struct TwistKnot {
  long m = 0;  // half-twist count; m = 0 is the unknot

  explicit TwistKnot(long m_);
};

// Symmetrized Alexander polynomial of T(a,b); Delta(1) = 1.
LaurentPolynomial alexander_torus(const TorusKnot& k);

// 0-th torsion coefficient sum_{j>=1} j*a_j of a symmetric polynomial.
Int torsion_t0(const LaurentPolynomial& p);

// (Alexander polynomial, signature) of the twist knot T_m.
std::pair<LaurentPolynomial, int> twist_knot_invariants(const TwistKnot& k);

}  // namespace concord
