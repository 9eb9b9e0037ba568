#include "concord/knotpoly.hpp"

#include <numeric>
#include <sstream>

namespace concord {

LaurentPolynomial::LaurentPolynomial(const Int& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Int& c) {
  LaurentPolynomial p;
  if (c != 0) p.coeffs_[exponent] = c;
  return p;
}

Int LaurentPolynomial::coeff(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::set_coeff(long exponent, const Int& value) {
  if (value == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = value;
}

long LaurentPolynomial::min_exponent() const { return coeffs_.begin()->first; }
long LaurentPolynomial::max_exponent() const { return coeffs_.rbegin()->first; }

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [e, c] : coeffs_)
    if (coeff(-e) != c) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) + c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) - c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(long delta) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + delta] = c;
  return r;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  if (is_zero()) return {};
  // Long division from the top exponent down. Laurent shifts make the
  // divisor's leading term a plain monomial in t.
  LaurentPolynomial rem = *this;
  LaurentPolynomial quot;
  const long dlead = divisor.max_exponent();
  const Int dc = divisor.coeff(dlead);
  while (!rem.is_zero() && rem.max_exponent() - divisor.min_exponent() >=
                               rem.min_exponent() - rem.min_exponent()) {
    const long rlead = rem.max_exponent();
    // Stop once the remainder's top falls below what the divisor can reach.
    if (rem.min_exponent() > rlead) break;
    Int rc = rem.coeff(rlead);
    if (rc % dc != 0) throw Error("nonexact polynomial division (leading coefficient)");
    const long shift = rlead - dlead;
    const Int factor = rc / dc;
    quot.set_coeff(shift, quot.coeff(shift) + factor);
    for (const auto& [e, c] : divisor.coefficients())
      rem.set_coeff(e + shift, rem.coeff(e + shift) - factor * c);
    // Degree strictly drops each round; guard against a stuck loop anyway.
    if (!rem.is_zero() && rem.max_exponent() >= rlead)
      throw Error("nonexact polynomial division (no progress)");
  }
  if (!rem.is_zero()) throw Error("nonexact polynomial division (nonzero remainder)");
  return quot;
}

Int LaurentPolynomial::evaluate_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : coeffs_)
    if (e != 0) r.set_coeff(e - 1, Int(e) * c);
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (ac != 1 || e == 0) out << ac.get_str();
    if (e != 0) {
      if (ac != 1) out << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

TorusKnot::TorusKnot(long a_, long b_) : a(a_), b(b_) {
  if (a > b) std::swap(a, b);
  if (a < 1) throw UnsupportedError("torus knot parameters must be >= 1");
  if (std::gcd(a, b) != 1) throw UnsupportedError("torus knot parameters must be coprime");
}

TwistKnot::TwistKnot(long m_) : m(m_) {
  if (m < 0) throw UnsupportedError("twist knot parameter must be >= 0");
}

LaurentPolynomial alexander_torus(const TorusKnot& k) {
  if (k.is_unknot()) return LaurentPolynomial(Int(1));
  const long a = k.a, b = k.b;
  auto cyc = [](long n) {
    // t^n - 1
    LaurentPolynomial p = LaurentPolynomial::monomial(n, Int(1));
    p.set_coeff(0, p.coeff(0) - 1);
    return p;
  };
  LaurentPolynomial num = cyc(a * b) * cyc(1);
  LaurentPolynomial q = num.divide_exact(cyc(a)).divide_exact(cyc(b));
  LaurentPolynomial sym = q.shifted(-((a - 1) * (b - 1) / 2));
  if (sym.evaluate_at_one() != 1) throw Error("alexander_torus: Delta(1) != 1");
  if (!sym.is_symmetric()) throw Error("alexander_torus: result not symmetric");
  return sym;
}

Int torsion_t0(const LaurentPolynomial& p) {
  if (!p.is_symmetric()) throw UnsupportedError("torsion_t0: polynomial is not symmetric");
  Int s = 0;
  for (const auto& [e, c] : p.coefficients())
    if (e >= 1) s += Int(e) * c;
  return s;
}

std::pair<LaurentPolynomial, int> twist_knot_invariants(const TwistKnot& k) {
  const long m = k.m;
  if (m == 0) return {LaurentPolynomial(Int(1)), 0};
  LaurentPolynomial p;
  int sigma;
  if (m % 2 == 0) {
    p.set_coeff(1, Int(m / 2));
    p.set_coeff(0, Int(-(m + 1)));
    p.set_coeff(-1, Int(m / 2));
    sigma = 0;
  } else {
    p.set_coeff(1, Int((m + 1) / 2));
    p.set_coeff(0, Int(-m));
    p.set_coeff(-1, Int((m + 1) / 2));
    sigma = 2;
  }
  return {p, sigma};
}

}  // namespace concord
