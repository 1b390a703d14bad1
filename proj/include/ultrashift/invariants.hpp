#pragma once

#include <optional>
#include <string>

#include "ultrashift/ktheory.hpp"
#include "ultrashift/shift_space.hpp"
#include "ultrashift/ultragraph.hpp"

namespace ultrashift {

// Presentation-level witness that the edge shift is the full shift.
bool is_full_shift_edge(const Ultragraph& g);

// For infinite-edge graphs a finitely forbidden edge shift must come from a
// bouquet; Counterexample would contradict that classification and fails the
// test suite.
enum class GraphSftCheck { Vacuous, Confirmed, Counterexample };
GraphSftCheck graph_sft_implies_full_check(const Ultragraph& g);

enum class SftStatus { Sft, NotSft, Unknown };

struct SideReport {
  HypothesisReport hypotheses;
  SftStatus sft = SftStatus::Unknown;
  std::optional<ForbiddenSet> forbidden;  // set when Sft
  std::optional<KTheory> k;
  std::string k_unavailable;  // reason when k is absent

  bool eligible() const { return hypotheses.eligible(); }
};

// Conjugacy-obstruction report. NotConjugate needs both sides eligible and a
// K-group mismatch; the report never claims conjugacy.
struct ObstructionReport {
  enum class Verdict { NotConjugate, Inconclusive };
  SideReport left, right;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
};

SideReport analyze_side(const Ultragraph& g);
ObstructionReport obstruction(const Ultragraph& a, const Ultragraph& b);

}  // namespace ultrashift
