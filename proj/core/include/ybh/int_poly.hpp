#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ybh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Univariate polynomial over Z in the variable t = y^2, stored densely in
// ascending powers.  Canonical form: no trailing zero coefficients, so the
// zero polynomial has an empty coefficient vector and degree() == -1.
//
// Text form uses the y^2 convention throughout the code base: the coefficient
// of t^k prints as a multiple of y^{2k}, e.g. "1 - y^2" for 1 - t and
// "1 - y^4" for 1 - t^2.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) { if (c != 0) c_.push_back(Int(c)); }
  explicit IntPoly(Int c) { if (!c.is_zero()) c_.push_back(std::move(c)); }

  static IntPoly monomial(Int coeff, int power);
  static IntPoly variable() { return monomial(1, 1); }  // t = y^2
  static IntPoly from_coeffs(std::vector<Int> ascending);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Coefficient of t^i; zero outside the stored range.
  const Int& coeff(int i) const;
  const Int& leading() const;
  const Int& constant() const { return coeff(0); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // Units of Z[t] are the constants +-1.
  bool is_unit() const { return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1); }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o) { *this = *this * o; return *this; }
  IntPoly& operator*=(const Int& k);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { a -= b; return a; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& k) { a *= k; return a; }
  friend IntPoly operator*(const Int& k, IntPoly a) { a *= k; return a; }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  Int eval(const Int& x) const;

  // content() is the gcd of the coefficients, >= 0 (zero only for the zero
  // polynomial).  primitive() strips the content and keeps the sign, so
  // p == Int(content()) * primitive() always holds.
  Int content() const;
  IntPoly primitive() const;

  // Exact division in Z[t]: returns the quotient when the divisor divides
  // this polynomial with an integer-coefficient quotient, nullopt otherwise.
  // Throws std::invalid_argument on division by zero.
  std::optional<IntPoly> divided_exactly_by(const IntPoly& d) const;
  static bool divides(const IntPoly& a, const IntPoly& b);

  // Multiply by t^k (k >= 0).
  IntPoly shifted(int k) const;

  std::string str() const;
  // Parses the str() format ("3 - y^2 + 2y^6", "0", "-y^4", ...).
  // Throws std::invalid_argument with a position diagnostic on bad input.
  static IntPoly parse(const std::string& text);

  const std::vector<Int>& coeffs() const { return c_; }

  // Deterministic total order (degree, then coefficients from the constant
  // term up); used to sort torsion lists and map keys, not algebraic.
  static bool before(const IntPoly& a, const IntPoly& b);

 private:
  void trim();
  std::vector<Int> c_;
};

// The Boltzmann weights only ever need 1, t and 1 - t; keep them handy.
const IntPoly& poly_one();
const IntPoly& poly_t();
const IntPoly& poly_one_minus_t();

// Sign normalization used when reporting torsion invariants: make the lowest
// nonzero coefficient positive, so 1 - t is preferred over t - 1.
IntPoly normalize_invariant(const IntPoly& p);

// Binomial coefficient, zero when k < 0 or k > n.  Requires n >= 0.
Int binomial(int n, int k);

}  // namespace ybh
