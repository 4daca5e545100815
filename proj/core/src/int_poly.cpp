#include "ybh/int_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ybh {

namespace {
const Int kZero = 0;
}

IntPoly IntPoly::monomial(Int coeff, int power) {
  IntPoly p;
  if (coeff.is_zero()) return p;
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  p.c_.assign(static_cast<size_t>(power) + 1, Int(0));
  p.c_.back() = std::move(coeff);
  return p;
}

IntPoly IntPoly::from_coeffs(std::vector<Int> ascending) {
  IntPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
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

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& c : c_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  IntPoly r = *this;
  if (g != 1)
    for (auto& c : r.c_) c /= g;
  return r;
}

std::optional<IntPoly> IntPoly::divided_exactly_by(const IntPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("IntPoly: division by zero");
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) return std::nullopt;
  // Long division from the top; every leading-coefficient division must be
  // exact over Z for the quotient to exist in Z[t].
  std::vector<Int> rem = c_;
  std::vector<Int> quo(c_.size() - d.c_.size() + 1, Int(0));
  int rd = static_cast<int>(rem.size()) - 1;
  const int dd = d.degree();
  while (rd >= dd) {
    if (!rem[static_cast<size_t>(rd)].is_zero()) {
      Int q = rem[static_cast<size_t>(rd)] / d.leading();
      if (q * d.leading() != rem[static_cast<size_t>(rd)]) return std::nullopt;
      const int shift = rd - dd;
      quo[static_cast<size_t>(shift)] = q;
      for (int i = 0; i <= dd; ++i)
        rem[static_cast<size_t>(i + shift)] -= q * d.coeff(i);
    }
    --rd;
  }
  for (const auto& c : rem)
    if (!c.is_zero()) return std::nullopt;
  return from_coeffs(std::move(quo));
}

bool IntPoly::divides(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero();
  return b.divided_exactly_by(a).has_value();
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative power");
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.assign(c_.size() + static_cast<size_t>(k), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
  return r;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Int& c = c_[i];
    if (c.is_zero()) continue;
    const bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
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

namespace {

// Minimal recursive-descent reader for the str() format.
struct PolyReader {
  const std::string& s;
  size_t pos = 0;

  explicit PolyReader(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("IntPoly::parse: " + what + " at position " +
                                std::to_string(pos) + " in \"" + s + "\"");
  }

  bool read_uint(Int& out) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out = Int(s.substr(start, pos - start));
    return true;
  }

  IntPoly read() {
    IntPoly acc;
    skip_ws();
    if (pos >= s.size()) fail("empty input");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= s.size()) {
        if (first) fail("empty input");
        break;
      }
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Int mag;
      bool have_coeff = read_uint(mag);
      skip_ws();
      int power = 0;
      if (pos < s.size() && s[pos] == 'y') {
        ++pos;
        if (pos >= s.size() || s[pos] != '^') fail("expected '^' after 'y'");
        ++pos;
        Int p;
        if (!read_uint(p)) fail("expected exponent");
        if (p <= 0 || p % 2 != 0) fail("exponent must be a positive even integer");
        if (p > 2 * 4096) fail("exponent out of range");
        power = p.convert_to<int>() / 2;
        if (!have_coeff) mag = 1;
      } else if (!have_coeff) {
        fail("expected coefficient or 'y'");
      }
      acc += IntPoly::monomial(sign * mag, power);
      first = false;
    }
    return acc;
  }
};

}  // namespace

IntPoly IntPoly::parse(const std::string& text) {
  PolyReader r(text);
  return r.read();
}

bool IntPoly::before(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

const IntPoly& poly_one() {
  static const IntPoly p(1);
  return p;
}

const IntPoly& poly_t() {
  static const IntPoly p = IntPoly::variable();
  return p;
}

const IntPoly& poly_one_minus_t() {
  static const IntPoly p = IntPoly(1) - IntPoly::variable();
  return p;
}

Int binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

IntPoly normalize_invariant(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly q = p.primitive();
  for (int i = 0; i <= q.degree(); ++i) {
    if (q.coeff(i).is_zero()) continue;
    if (q.coeff(i) < 0) return -q;
    break;
  }
  return q;
}

}  // namespace ybh
