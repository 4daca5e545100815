#include "ybh/counting.hpp"

#include "ybh/face_maps.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ybh {

CountMethod parse_count_method(const std::string& name) {
  if (name == "inclusion-exclusion") return CountMethod::inclusion_exclusion;
  if (name == "recurrence") return CountMethod::recurrence;
  if (name == "enumeration") return CountMethod::enumeration;
  throw std::invalid_argument(
      "unknown counting method '" + name +
      "' (expected inclusion-exclusion, recurrence, or enumeration)");
}

Int stirling2(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("stirling2: negative input");
  if (m > n) return 0;
  // Row-by-row recurrence S(i,j) = j S(i-1,j) + S(i-1,j-1).
  std::vector<Int> row(m + 1, Int(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      row[j] = Int(j) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[m];
}

namespace {

Int factorial(int m) {
  Int r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

Int s_tilde_incl_excl(int n, int m, int u) {
  Int total = 0;
  for (int i = 0; i <= u; ++i) {
    Int term = binomial(u, i) * boost::multiprecision::pow(
                                    Int(m - i), static_cast<unsigned>(n));
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Int s_tilde_recurrence(int n, int m, int u,
                       std::map<std::pair<int, int>, Int>& memo) {
  if (u == m) return factorial(m) * stirling2(n, m);
  const auto key = std::make_pair(m, u);
  const auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int v = s_tilde_recurrence(n, m - 1, u, memo) +
          s_tilde_recurrence(n, m, u + 1, memo);
  return memo.emplace(key, std::move(v)).first->second;
}

Int s_tilde_enumeration(int n, int m, int u) {
  if (m == 0) return (n == 0 && u == 0) ? 1 : 0;
  const ComplexSpec spec = ComplexSpec::use_top(m, u, m - u);
  return Int(enumerate_basis(spec, n).size());
}

}  // namespace

Int s_tilde(int n, int m, int u, CountMethod method) {
  if (n < 0) throw std::invalid_argument("s_tilde: n must be >= 0");
  if (u < 0 || u > m) {
    throw std::invalid_argument("s_tilde: need 0 <= u <= m");
  }
  switch (method) {
    case CountMethod::inclusion_exclusion:
      return s_tilde_incl_excl(n, m, u);
    case CountMethod::recurrence: {
      std::map<std::pair<int, int>, Int> memo;
      return s_tilde_recurrence(n, m, u, memo);
    }
    case CountMethod::enumeration:
      return s_tilde_enumeration(n, m, u);
  }
  throw std::invalid_argument("s_tilde: invalid method");
}

const Int& CountTable::at(int n, int m, int u) const {
  const auto it = values.find(std::make_tuple(n, m, u));
  if (it == values.end()) {
    throw std::out_of_range("CountTable: no entry for (" + std::to_string(n) +
                            "," + std::to_string(m) + "," + std::to_string(u) +
                            ")");
  }
  return it->second;
}

std::string CountTable::str() const {
  // Column widths driven by the widest entry per column.
  std::vector<size_t> width(max_n + 1, 1);
  for (int n = 1; n <= max_n; ++n) {
    width[n] = std::to_string(n).size();
    for (int m = 1; m <= max_m; ++m) {
      width[n] = std::max(width[n], at(n, m, m - 1).str().size());
    }
  }
  std::ostringstream os;
  os << "m\\n";
  for (int n = 1; n <= max_n; ++n) {
    os << "  " << std::setw(static_cast<int>(width[n])) << n;
  }
  os << "\n";
  for (int m = 1; m <= max_m; ++m) {
    os << std::setw(3) << m;
    for (int n = 1; n <= max_n; ++n) {
      os << "  " << std::setw(static_cast<int>(width[n]))
         << at(n, m, m - 1).str();
    }
    os << "\n";
  }
  return os.str();
}

std::string CountTable::csv() const {
  std::ostringstream os;
  os << "m/n";
  for (int n = 1; n <= max_n; ++n) os << "," << n;
  os << "\n";
  for (int m = 1; m <= max_m; ++m) {
    os << m;
    for (int n = 1; n <= max_n; ++n) os << "," << at(n, m, m - 1).str();
    os << "\n";
  }
  return os.str();
}

CountTable rank_table(int max_n, int max_m) {
  if (max_n < 1 || max_m < 1) {
    throw std::invalid_argument("rank_table: bounds must be >= 1");
  }
  CountTable table;
  table.max_n = max_n;
  table.max_m = max_m;
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      const int u = m - 1;
      const Int a = s_tilde(n, m, u, CountMethod::inclusion_exclusion);
      const Int b = s_tilde(n, m, u, CountMethod::recurrence);
      const Int c = s_tilde(n, m, u, CountMethod::enumeration);
      if (a != b || b != c) {
        throw std::logic_error(
            "rank_table: methods disagree at (n=" + std::to_string(n) +
            ", m=" + std::to_string(m) + ", u=" + std::to_string(u) +
            "): inclusion-exclusion=" + a.str() + " recurrence=" + b.str() +
            " enumeration=" + c.str());
      }
      table.values.emplace(std::make_tuple(n, m, u), a);
    }
  }
  return table;
}

}  // namespace ybh
