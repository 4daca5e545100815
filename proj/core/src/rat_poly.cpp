#include "ybh/rat_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ybh {

namespace {
const Rat kZero = 0;
}

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(static_cast<size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) c_.push_back(Rat(p.coeff(i)));
  trim();
}

RatPoly RatPoly::from_coeffs(std::vector<Rat> ascending) {
  RatPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.is_zero()) throw std::invalid_argument("RatPoly: division by zero");
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo;
  const int dd = b.degree();
  int rd = static_cast<int>(rem.size()) - 1;
  if (rd >= dd) quo.assign(static_cast<size_t>(rd - dd) + 1, Rat(0));
  while (rd >= dd) {
    if (!rem[static_cast<size_t>(rd)].is_zero()) {
      Rat f = rem[static_cast<size_t>(rd)] / b.leading();
      quo[static_cast<size_t>(rd - dd)] = f;
      for (int i = 0; i <= dd; ++i)
        rem[static_cast<size_t>(i + rd - dd)] -= f * b.coeff(i);
    }
    --rd;
  }
  q = from_coeffs(std::move(quo));
  r = from_coeffs(std::move(rem));
}

std::optional<RatPoly> RatPoly::divided_exactly_by(const RatPoly& d) const {
  RatPoly q, r;
  divmod(*this, d, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Rat RatPoly::content() const {
  if (is_zero()) return Rat(0);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& c : c_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c));
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  }
  if (num_gcd < 0) num_gcd = -num_gcd;
  return Rat(num_gcd, den_lcm);
}

IntPoly RatPoly::primitive() const {
  if (is_zero()) return IntPoly();
  Rat c = content();
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& q : c_) {
    Rat v = q / c;
    if (boost::multiprecision::denominator(v) != 1)
      throw std::logic_error("RatPoly::primitive: non-integral after content strip");
    out.push_back(boost::multiprecision::numerator(v));
  }
  return IntPoly::from_coeffs(std::move(out));
}

bool RatPoly::is_integral() const {
  for (const auto& c : c_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

IntPoly RatPoly::to_int_poly() const {
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::domain_error("RatPoly::to_int_poly: coefficient " + c.str() +
                              " is not an integer");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return IntPoly::from_coeffs(std::move(out));
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    const bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << "y^" << 2 * i;
    }
  }
  return out.str();
}

}  // namespace ybh
