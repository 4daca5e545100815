#pragma once

#include "ybh/int_poly.hpp"

namespace ybh {

// Univariate polynomial over Q, dense ascending coefficients, trailing
// coefficients nonzero.  Q[t] is the Euclidean domain the Smith engine
// conceptually works in; the transforms P and Q of a polynomial Smith
// decomposition are stored with these entries until certification rewrites
// them over Z[t].
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(long c) { if (c != 0) c_.push_back(Rat(c)); }
  explicit RatPoly(Rat c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  explicit RatPoly(const IntPoly& p);

  static RatPoly from_coeffs(std::vector<Rat> ascending);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int i) const;
  const Rat& leading() const;
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rat& k);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { a += b; return a; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { a -= b; return a; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rat& k) { a *= k; return a; }

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

  Rat eval(const Rat& x) const;

  // Euclidean division: a = q*b + r with deg r < deg b.
  // Throws std::invalid_argument on zero divisor.
  static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
  // Exact division; nullopt when the remainder is nonzero.
  std::optional<RatPoly> divided_exactly_by(const RatPoly& d) const;

  // content() is the positive rational c with *this == c * primitive(), where
  // primitive() has integer coprime coefficients; the sign stays with the
  // primitive part.  content() of zero is zero.
  Rat content() const;
  IntPoly primitive() const;
  // True when every coefficient is an integer.
  bool is_integral() const;
  IntPoly to_int_poly() const;  // throws std::domain_error unless integral

  std::string str() const;

  const std::vector<Rat>& coeffs() const { return c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace ybh
