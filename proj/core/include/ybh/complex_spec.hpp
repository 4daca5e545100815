#pragma once

#include "ybh/yang_baxter.hpp"

#include <string>

namespace ybh {

// Which chain complex to build over the alphabet.  All of them share the same
// differential, computed on the full tensor complex and then restricted:
//
//   full       all words on m letters (the full tensor complex of R_(m));
//   use_top    quotient complex: words must use each of the top u letters at
//              least once; words on fewer letters are killed.  Only l bottom
//              letters may appear, so the complex lives on the consecutive
//              alphabet 1..(l+u) regardless of the ambient m (the isomorphism
//              class only depends on u and l; m is kept as metadata);
//   top_capped subcomplex of the final complex (u = m-1, l = 1) spanned by
//              words using the top letter at most `cap` times;
//   kunneth    subcomplex of `full` spanned by words that are a prefix on
//              letters > split followed by a suffix on letters <= split;
//   plus the two quotients-by-subcomplex the conjecture harness studies.
//
// The "final" complex is use_top with u = m-1, l = 1.
struct ComplexSpec {
  enum class Kind {
    full,
    use_top,
    top_capped,
    kunneth,
    kunneth_quotient,
    cap_quotient,
  };

  Kind kind = Kind::full;
  int m = 1;      // ambient alphabet size as given (metadata for use_top)
  int u = 0;      // use_top: number of required top letters
  int l = 0;      // use_top: number of free bottom letters
  int cap = 0;    // top_capped / cap_quotient
  int split = 0;  // kunneth / kunneth_quotient

  static ComplexSpec full(int m);
  static ComplexSpec use_top(int m, int u, int l);
  static ComplexSpec final_complex(int m);  // use_top(m, m-1, 1)
  static ComplexSpec top_capped(int m, int cap);
  static ComplexSpec kunneth(int m, int split);
  static ComplexSpec kunneth_quotient(int m, int split);
  static ComplexSpec cap_quotient(int m, int cap);

  // Number of letters words of this complex are actually built from.
  int alphabet() const;
  // Letters strictly above this value are required (use_top family).
  int required_above() const;
  // The top letter for the capped variants.
  Letter top_letter() const { return static_cast<Letter>(alphabet()); }

  // True when x (over 1..alphabet()) is a basis word of the complex.
  bool admits(const Tuple& x) const;
  // Projection rule for boundary outputs: true when the word survives in
  // this complex (for quotient variants), false when it is killed.  For the
  // subcomplex variants (full, kunneth, and the cap constraint) a violation
  // among boundary outputs is a bug, not a projection; boundary_matrix
  // checks that separately.
  bool keeps(const Tuple& x) const;

  // Canonical cache key, e.g. "m4u3l1" for the final complex on 4 letters.
  std::string key() const;
  // Canonical spec string, e.g. "final:m=4"; parse(str()) == *this.
  std::string str() const;

  bool operator==(const ComplexSpec& o) const;
};

// Parses the spec-string grammar:
//   full:m=<int> | usetop:m=<int>,u=<int>,l=<int> | final:m=<int>
//   | capped:m=<int>,cap=<int> | kunneth:m=<int>,split=<int>
//   | kunnethq:m=<int>,split=<int> | cappedq:m=<int>,cap=<int>
// Throws std::invalid_argument with a position diagnostic on violations.
ComplexSpec parse_spec(const std::string& text);

}  // namespace ybh
