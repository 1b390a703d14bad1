#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ultrashift/ultragraph.hpp"
#include "ultrashift/word.hpp"

namespace ultrashift {

// Generalized cylinder Z(stem, excluded): every y that extends the stem
// letter for letter whose next letter (if it has one) avoids `excluded`.
struct Cylinder {
  Word stem;  // Empty or Finite
  std::vector<Index> excluded;
};

bool cylinder_contains(const Cylinder& c, const Word& y);

// Finite list of forbidden finite words.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  explicit ForbiddenSet(std::vector<std::vector<Index>> words);

  const std::vector<std::vector<Index>>& words() const { return words_; }
  std::size_t max_block_length() const { return max_len_; }
  bool operator==(const ForbiddenSet&) const = default;

 private:
  std::vector<std::vector<Index>> words_;  // sorted, duplicate-free
  std::size_t max_len_ = 0;
};

// The shift map sigma.
inline Word shift(const Word& x) { return x.shifted(); }

// Membership of x in X_F over the given alphabet (finite(N) or the infinite
// alphabet {1,2,...}). Finite words over an infinite alphabet reduce to "no
// forbidden subblock": F is finite, so any fresh letter a gives the
// infinitely many extensions xa a^inf demanded by the definition.
bool in_xf(const ForbiddenSet& f, const Universe& alphabet, const Word& x);

// s(x_{i+1}) in r(x_i) along the whole word; the empty word is a path.
bool is_path(const Ultragraph& g, const Word& x);
bool is_path(const Ultragraph& g, std::span<const Index> letters);

// Membership in the edge shift X_G via its structural characterization:
// infinite paths always belong; when the edge set is infinite so do the
// empty word and every finite path with infinitely many continuations.
// Requires every range to contain a non-sink (H5); refuses otherwise.
bool in_edge_shift(const Ultragraph& g, const Word& x);
// Reason for the last decision, for CLI output.
struct MembershipResult {
  bool member;
  std::string reason;  // set when not a member
};
MembershipResult edge_shift_membership(const Ultragraph& g, const Word& x);

// The canonical 2-letter forbidden set {ef : s(f) not in r(e)} when finite;
// nullopt when infinite. A finite result witnesses that X_G is an SFT.
std::optional<ForbiddenSet> edge_shift_forbidden_set(const Ultragraph& g);

// One-step shift over the infinite alphabet as an ultragraph: one vertex per
// letter, identity tail, exceptional ranges cut out the forbidden successors.
Ultragraph ultragraph_from_one_step(const ForbiddenSet& two_letter_words);

// All paths of the given length over edges with index <= max_edge_index,
// lexicographic.
std::vector<Word> enumerate_paths(const Ultragraph& g, std::size_t len, Index max_edge_index);

// Distinct one-letter extensions a of a finite member alpha with alpha.a
// still a member, at most `want` of them (evidence for the
// infinite-extension property).
std::vector<Index> member_extensions(const Ultragraph& g, const Word& alpha,
                                     std::size_t want = 5);

}  // namespace ultrashift
