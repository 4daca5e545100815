#include "ybh/complex_spec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ybh {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("ComplexSpec: " + msg);
}

constexpr int kMaxAlphabet = 32;

}  // namespace

ComplexSpec ComplexSpec::full(int m) {
  require(m >= 1 && m <= kMaxAlphabet, "full: need 1 <= m <= 32");
  ComplexSpec s;
  s.kind = Kind::full;
  s.m = m;
  return s;
}

ComplexSpec ComplexSpec::use_top(int m, int u, int l) {
  require(m >= 1 && m <= kMaxAlphabet, "usetop: need 1 <= m <= 32");
  // l == 0 is allowed: C of (m, m) with every letter required is the
  // counterexample complex of the non-split direct sum comparison.
  require(u >= 0 && l >= 0, "usetop: need u >= 0 and l >= 0");
  require(u + l >= 1, "usetop: need u + l >= 1");
  require(u + l <= m, "usetop: need u + l <= m");
  ComplexSpec s;
  s.kind = Kind::use_top;
  s.m = m;
  s.u = u;
  s.l = l;
  return s;
}

ComplexSpec ComplexSpec::final_complex(int m) {
  require(m >= 1 && m <= kMaxAlphabet, "final: need 1 <= m <= 32");
  return use_top(m, m - 1, 1);
}

ComplexSpec ComplexSpec::top_capped(int m, int cap) {
  require(m >= 2 && m <= kMaxAlphabet, "capped: need 2 <= m <= 32");
  require(cap >= 1, "capped: need cap >= 1");
  ComplexSpec s;
  s.kind = Kind::top_capped;
  s.m = m;
  s.u = m - 1;
  s.l = 1;
  s.cap = cap;
  return s;
}

ComplexSpec ComplexSpec::kunneth(int m, int split) {
  require(m >= 2 && m <= kMaxAlphabet, "kunneth: need 2 <= m <= 32");
  require(split >= 1 && split < m, "kunneth: need 1 <= split < m");
  ComplexSpec s;
  s.kind = Kind::kunneth;
  s.m = m;
  s.split = split;
  return s;
}

ComplexSpec ComplexSpec::kunneth_quotient(int m, int split) {
  ComplexSpec s = kunneth(m, split);
  s.kind = Kind::kunneth_quotient;
  return s;
}

ComplexSpec ComplexSpec::cap_quotient(int m, int cap) {
  ComplexSpec s = top_capped(m, cap);
  s.kind = Kind::cap_quotient;
  return s;
}

int ComplexSpec::alphabet() const {
  switch (kind) {
    case Kind::full:
    case Kind::kunneth:
    case Kind::kunneth_quotient:
      return m;
    case Kind::use_top:
      return u + l;
    case Kind::top_capped:
    case Kind::cap_quotient:
      return m;
  }
  return m;
}

int ComplexSpec::required_above() const {
  switch (kind) {
    case Kind::full:
    case Kind::kunneth:
    case Kind::kunneth_quotient:
      return alphabet();  // nothing required
    case Kind::use_top:
      return l;
    case Kind::top_capped:
    case Kind::cap_quotient:
      return 1;
  }
  return alphabet();
}

namespace {

bool uses_all_required(const Tuple& x, int required_above, int alphabet) {
  if (required_above >= alphabet) return true;
  // Bitmask of required letters seen; alphabet <= 32.
  unsigned long long seen = 0;
  const unsigned long long want = (1ull << (alphabet - required_above)) - 1ull;
  for (Letter a : x)
    if (a > required_above) seen |= 1ull << (a - required_above - 1);
  return (seen & want) == want;
}

int count_letter(const Tuple& x, Letter a) {
  return static_cast<int>(std::count(x.begin(), x.end(), a));
}

bool is_kunneth_word(const Tuple& x, int split) {
  // A (possibly empty) prefix on letters > split, then letters <= split only.
  size_t i = 0;
  while (i < x.size() && x[i] > split) ++i;
  for (; i < x.size(); ++i)
    if (x[i] > split) return false;
  return true;
}

}  // namespace

bool ComplexSpec::admits(const Tuple& x) const {
  const int ab = alphabet();
  for (Letter a : x)
    if (a < 1 || a > ab) return false;
  switch (kind) {
    case Kind::full:
      return true;
    case Kind::use_top:
      return uses_all_required(x, required_above(), ab);
    case Kind::top_capped:
      return uses_all_required(x, 1, ab) && count_letter(x, top_letter()) <= cap;
    case Kind::cap_quotient:
      return uses_all_required(x, 1, ab) && count_letter(x, top_letter()) > cap;
    case Kind::kunneth:
      return is_kunneth_word(x, split);
    case Kind::kunneth_quotient:
      return !is_kunneth_word(x, split);
  }
  return false;
}

bool ComplexSpec::keeps(const Tuple& x) const {
  switch (kind) {
    case Kind::full:
    case Kind::kunneth:
      // Subcomplexes: no projection.  boundary_matrix verifies closure.
      return true;
    case Kind::use_top:
    case Kind::top_capped:
      // Quotient by the words missing a required letter.  The cap constraint
      // is a subcomplex condition (face maps only delete letters), so it is
      // not part of the projection.
      return uses_all_required(x, required_above(), alphabet());
    case Kind::cap_quotient:
      return admits(x);
    case Kind::kunneth_quotient:
      return !is_kunneth_word(x, split);
  }
  return false;
}

std::string ComplexSpec::key() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::full:
      out << "m" << m << "u0l" << m;
      break;
    case Kind::use_top:
      out << "m" << (u + l) << "u" << u << "l" << l;
      break;
    case Kind::top_capped:
      out << "m" << m << "u" << u << "l1cap" << cap;
      break;
    case Kind::cap_quotient:
      out << "m" << m << "u" << u << "l1capq" << cap;
      break;
    case Kind::kunneth:
      out << "m" << m << "kun" << split;
      break;
    case Kind::kunneth_quotient:
      out << "m" << m << "kunq" << split;
      break;
  }
  return out.str();
}

std::string ComplexSpec::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::full:
      out << "full:m=" << m;
      break;
    case Kind::use_top:
      if (l == 1 && u == (u + l) - 1 && u >= 1)
        out << "final:m=" << (u + l);
      else if (u == 0)
        out << "full:m=" << l;
      else
        out << "usetop:m=" << (u + l) << ",u=" << u << ",l=" << l;
      break;
    case Kind::top_capped:
      out << "capped:m=" << m << ",cap=" << cap;
      break;
    case Kind::cap_quotient:
      out << "cappedq:m=" << m << ",cap=" << cap;
      break;
    case Kind::kunneth:
      out << "kunneth:m=" << m << ",split=" << split;
      break;
    case Kind::kunneth_quotient:
      out << "kunnethq:m=" << m << ",split=" << split;
      break;
  }
  return out.str();
}

bool ComplexSpec::operator==(const ComplexSpec& o) const {
  // use_top compares by isomorphism class (internal alphabet), so
  // final:m=4 == usetop:m=4,u=3,l=1 and full:m=3 == usetop:m=3,u=0,l=3.
  auto canon = [](const ComplexSpec& s) {
    ComplexSpec c = s;
    if (c.kind == Kind::use_top && c.u == 0) {
      c.kind = Kind::full;
      c.m = c.l;
      c.l = 0;
    } else if (c.kind == Kind::use_top) {
      c.m = c.u + c.l;
    }
    return std::tuple(c.kind, c.m, c.u, c.l, c.cap, c.split);
  };
  return canon(*this) == canon(o);
}

namespace {

struct SpecReader {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_spec: " + what + " at position " +
                                std::to_string(pos) + " in \"" + s + "\"");
  }

  std::string read_ident() {
    size_t start = pos;
    while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) != 0)) ++pos;
    if (pos == start) fail("expected identifier");
    return s.substr(start, pos - start);
  }

  void expect(char c) {
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  int read_int() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0) ++pos;
    if (pos == start) fail("expected integer");
    long v = std::stol(s.substr(start, pos - start));
    if (v > 1000000) fail("integer out of range");
    return static_cast<int>(v);
  }

  // Reads "name=int" pairs separated by commas, in the given order.
  std::map<std::string, int> read_params(const std::vector<std::string>& names) {
    std::map<std::string, int> out;
    for (size_t k = 0; k < names.size(); ++k) {
      if (k > 0) expect(',');
      std::string id = read_ident();
      if (id != names[k]) fail("expected parameter '" + names[k] + "'");
      expect('=');
      out[id] = read_int();
    }
    if (pos != s.size()) fail("trailing input");
    return out;
  }
};

}  // namespace

ComplexSpec parse_spec(const std::string& text) {
  SpecReader r{text};
  std::string head = r.read_ident();
  r.expect(':');
  if (head == "full") {
    auto p = r.read_params({"m"});
    return ComplexSpec::full(p["m"]);
  }
  if (head == "usetop") {
    auto p = r.read_params({"m", "u", "l"});
    return ComplexSpec::use_top(p["m"], p["u"], p["l"]);
  }
  if (head == "final") {
    auto p = r.read_params({"m"});
    return ComplexSpec::final_complex(p["m"]);
  }
  if (head == "capped") {
    auto p = r.read_params({"m", "cap"});
    return ComplexSpec::top_capped(p["m"], p["cap"]);
  }
  if (head == "cappedq") {
    auto p = r.read_params({"m", "cap"});
    return ComplexSpec::cap_quotient(p["m"], p["cap"]);
  }
  if (head == "kunneth") {
    auto p = r.read_params({"m", "split"});
    return ComplexSpec::kunneth(p["m"], p["split"]);
  }
  if (head == "kunnethq") {
    auto p = r.read_params({"m", "split"});
    return ComplexSpec::kunneth_quotient(p["m"], p["split"]);
  }
  r.pos = 0;
  r.fail("unknown spec kind '" + head + "'");
}

}  // namespace ybh
