#pragma once

#include <string>
#include <vector>

#include "ultrashift/shift_space.hpp"
#include "ultrashift/ultragraph.hpp"
#include "ultrashift/word.hpp"

namespace ultrashift {

struct GroupLetter {
  Index edge;
  bool inverse;
  bool operator==(const GroupLetter&) const = default;
};

// Reduced word in the free group on the edge set. The empty word is the
// neutral element.
class GroupWord {
 public:
  GroupWord() = default;
  static GroupWord reduce(std::vector<GroupLetter> letters);

  const std::vector<GroupLetter>& letters() const { return letters_; }
  bool is_neutral() const { return letters_.empty(); }
  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;
  bool operator==(const GroupWord&) const = default;
  std::string to_string() const;  // "e1.~e2"

 private:
  std::vector<GroupLetter> letters_;
};

// Shape of a reduced word relative to V = {a b^{-1} : a, b paths or 0}.
struct DomainForm {
  enum class Kind { Neutral, PositivePath, InversePath, Transition, OutsideV };
  Kind kind = Kind::OutsideV;
  std::vector<Index> a;  // path; for Transition the word is a.b^{-1}
  std::vector<Index> b;
};

// Pattern-match g against W.W^{-1}: path-ness of both halves and a nonempty
// range intersection for the mixed case; anything else acts through the
// empty domain.
DomainForm classify(const Ultragraph& g, const GroupWord& w);

// x in X_g. Requires x in X (usage error otherwise) and the standing
// hypotheses H1, H2 of the partial-action construction.
bool in_x(const Ultragraph& g, const GroupWord& gw, const Word& x);

// x in the domain X_{g^{-1}} of theta_g.
bool in_domain(const Ultragraph& g, const GroupWord& gw, const Word& x);

// theta_g(x); precondition error naming the failing case when x is outside
// the domain.
Word theta(const Ultragraph& g, const GroupWord& gw, const Word& x);

// x in X_A per the two-case definition: s(x) in A for nonempty x, and the
// empty word belongs iff s^{-1}(A) is cofinite in the edge set. Refuses when
// s^{-1}(A) and its complement are both infinite.
bool in_xa(const Ultragraph& g, const IndexSet& vertices, const Word& x);

}  // namespace ultrashift
