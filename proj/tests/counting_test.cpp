#include <stdexcept>

#include "doctest.h"
#include "ybh/counting.hpp"
#include "ybh/face_maps.hpp"

using namespace ybh;

namespace {

Int factorial(int n) {
  Int f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// The recorded 7 x 7 grid of final-complex chain ranks, rows m, columns n.
const long kRanks[7][7] = {
    {1, 1, 1, 1, 1, 1, 1},
    {1, 3, 7, 15, 31, 63, 127},
    {0, 2, 12, 50, 180, 602, 1932},
    {0, 0, 6, 60, 390, 2100, 10206},
    {0, 0, 0, 24, 360, 3360, 25200},
    {0, 0, 0, 0, 120, 2520, 31920},
    {0, 0, 0, 0, 0, 720, 20160},
};

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("method names") {
  CHECK(parse_count_method("inclusion-exclusion") ==
        CountMethod::inclusion_exclusion);
  CHECK(parse_count_method("recurrence") == CountMethod::recurrence);
  CHECK(parse_count_method("enumeration") == CountMethod::enumeration);
  CHECK_THROWS_AS(parse_count_method("guess"), std::invalid_argument);
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(6, 3) == 90);
  CHECK(stirling2(7, 3) == 301);
  CHECK(stirling2(9, 4) == 7770);
  for (int n = 1; n <= 8; ++n) {
    CHECK(stirling2(n, 1) == 1);
    CHECK(stirling2(n, n) == 1);
  }
}

TEST_CASE("all three counting routes agree on the whole grid") {
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= 7; ++n) {
      const Int a = s_tilde(n, m, m - 1, CountMethod::inclusion_exclusion);
      const Int b = s_tilde(n, m, m - 1, CountMethod::recurrence);
      CHECK(a == b);
      if (static_cast<double>(m) * n <= 24) {  // enumeration walks m^n words
        const Int c = s_tilde(n, m, m - 1, CountMethod::enumeration);
        CHECK(a == c);
      }
      CHECK(a == kRanks[m - 1][n - 1]);
    }
}

TEST_CASE("identities tying the counts to stirling numbers") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 7; ++n) {
      CHECK(s_tilde(n, m, m, CountMethod::inclusion_exclusion) ==
            factorial(m) * stirling2(n, m));
      CHECK(s_tilde(n, m, m - 1, CountMethod::inclusion_exclusion) ==
            factorial(m - 1) * stirling2(n + 1, m));
    }
  // Diagonal (m+1)!/2 and subdiagonal m!.
  for (int m = 2; m <= 7; ++m) {
    CHECK(s_tilde(m, m, m - 1, CountMethod::recurrence) ==
          factorial(m + 1) / 2);
    if (m <= 6)
      CHECK(s_tilde(m, m + 1, m, CountMethod::recurrence) == factorial(m));
  }
}

TEST_CASE("the defining recurrence holds") {
  for (int m = 2; m <= 6; ++m)
    for (int u = 0; u < m; ++u)
      for (int n = 1; n <= 6; ++n) {
        const Int whole = s_tilde(n, m, u, CountMethod::inclusion_exclusion);
        const Int drop = s_tilde(n, m - 1, u, CountMethod::inclusion_exclusion);
        const Int tighten =
            s_tilde(n, m, u + 1, CountMethod::inclusion_exclusion);
        CHECK(whole == drop + tighten);
      }
}

TEST_CASE("counts equal actual basis sizes") {
  for (int m = 1; m <= 4; ++m)
    for (int u = 0; u < m; ++u)
      for (int n = 0; n <= 4; ++n) {
        const auto basis = enumerate_basis(ComplexSpec::use_top(m, u, m - u), n);
        CHECK(Int(static_cast<long>(basis.size())) ==
              s_tilde(n, m, u, CountMethod::inclusion_exclusion));
      }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(s_tilde(-1, 3, 1, CountMethod::recurrence),
                  std::invalid_argument);
  CHECK_THROWS_AS(s_tilde(3, 2, 3, CountMethod::recurrence),
                  std::invalid_argument);
}

TEST_CASE("cross-checked table object") {
  const CountTable t = rank_table(7, 7);
  CHECK(t.max_n == 7);
  CHECK(t.max_m == 7);
  CHECK(t.at(6, 3, 2) == 602);
  CHECK(t.at(7, 3, 2) == 1932);
  CHECK(t.at(7, 7, 6) == 20160);
  CHECK(t.str().find("1932") != std::string::npos);
  CHECK(t.csv().find("20160") != std::string::npos);
}

}  // TEST_SUITE
