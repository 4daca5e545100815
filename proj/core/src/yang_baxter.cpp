#include "ybh/yang_baxter.hpp"

#include <stdexcept>

namespace ybh {

void add_term(ChainVector& v, const Tuple& x, const IntPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

void add_scaled(ChainVector& v, const ChainVector& w, const IntPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [x, q] : w) add_term(v, x, q * c);
}

RImage apply_R(Letter a, Letter b) {
  RImage img;
  if (a >= b) {
    img.term[0] = {b, a, &poly_one()};
    img.count = 1;
  } else {
    img.term[0] = {a, b, &poly_one_minus_t()};
    img.term[1] = {b, a, &poly_t()};
    img.count = 2;
  }
  return img;
}

IntPoly boltzmann_weight(Letter a, Letter b, Letter c, Letter d) {
  if (d == a && a >= b && b == c) return poly_one();
  if (d == a && a < b && b == c) return poly_t();
  if (c == a && a < b && b == d) return poly_one_minus_t();
  return IntPoly();
}

namespace {

// Applies R to positions (pos, pos+1) of each word in v.
ChainVector apply_R_at(const ChainVector& v, int pos) {
  ChainVector out;
  for (const auto& [x, coeff] : v) {
    const RImage img = apply_R(x[static_cast<size_t>(pos)], x[static_cast<size_t>(pos) + 1]);
    for (int k = 0; k < img.count; ++k) {
      Tuple y = x;
      y[static_cast<size_t>(pos)] = img.term[k].c;
      y[static_cast<size_t>(pos) + 1] = img.term[k].d;
      add_term(out, y, coeff * *img.term[k].w);
    }
  }
  return out;
}

}  // namespace

bool verify_ybe(int m) {
  if (m < 1 || m > 250) throw std::invalid_argument("verify_ybe: m out of range");
  Tuple x(3);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      for (int c = 1; c <= m; ++c) {
        x[0] = static_cast<Letter>(a);
        x[1] = static_cast<Letter>(b);
        x[2] = static_cast<Letter>(c);
        ChainVector v{{x, poly_one()}};
        // (R12 then R23 then R12) vs (R23 then R12 then R23), i.e.
        // (R (x) I)(I (x) R)(R (x) I) applied right to left.
        ChainVector lhs = apply_R_at(apply_R_at(apply_R_at(v, 0), 1), 0);
        ChainVector rhs = apply_R_at(apply_R_at(apply_R_at(v, 1), 0), 1);
        if (lhs != rhs) return false;
      }
  return true;
}

bool verify_column_unital(int m) {
  if (m < 1 || m > 250) throw std::invalid_argument("verify_column_unital: m out of range");
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      const RImage img = apply_R(static_cast<Letter>(a), static_cast<Letter>(b));
      IntPoly sum;
      for (int k = 0; k < img.count; ++k) sum += *img.term[k].w;
      if (!sum.is_one()) return false;
    }
  return true;
}

std::string word_str(const Tuple& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(static_cast<int>(x[i]));
  }
  s += ")";
  return s;
}

std::string chain_str(const ChainVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [word, coeff] : v) {
    if (!s.empty()) s += " + ";
    s += "(" + coeff.str() + ")" + word_str(word);
  }
  return s;
}

}  // namespace ybh
