#include "ultrashift/invariants.hpp"

namespace ultrashift {

bool is_full_shift_edge(const Ultragraph& g) { return g.classify().is_bouquet; }

GraphSftCheck graph_sft_implies_full_check(const Ultragraph& g) {
  if (!g.classify().is_graph) throw UsageError("graph_sft_implies_full_check needs a graph");
  if (!g.has_infinitely_many_edges()) {
    throw UsageError("graph_sft_implies_full_check needs an infinite edge set");
  }
  std::optional<ForbiddenSet> f = edge_shift_forbidden_set(g);
  if (!f) return GraphSftCheck::Vacuous;
  return is_full_shift_edge(g) ? GraphSftCheck::Confirmed : GraphSftCheck::Counterexample;
}

SideReport analyze_side(const Ultragraph& g) {
  SideReport side;
  side.hypotheses = g.hypotheses();
  side.forbidden = edge_shift_forbidden_set(g);
  side.sft = side.forbidden ? SftStatus::Sft : SftStatus::NotSft;
  if (side.eligible()) {
    try {
      side.k = k_theory(g);
    } catch (const KTheoryError& err) {
      side.k_unavailable = err.what();
    }
  } else {
    side.k_unavailable = "side ineligible: " + side.hypotheses.failing();
  }
  return side;
}

ObstructionReport obstruction(const Ultragraph& a, const Ultragraph& b) {
  ObstructionReport report{analyze_side(a), analyze_side(b), ObstructionReport::Verdict::Inconclusive,
                           ""};
  const SideReport& l = report.left;
  const SideReport& r = report.right;
  if (!l.eligible() || !r.eligible()) {
    std::string who = !l.eligible() ? (!r.eligible() ? "both sides fail" : "left side fails")
                                    : "right side fails";
    std::string which = !l.eligible() ? l.hypotheses.failing() : r.hypotheses.failing();
    report.reason = "ineligible: " + who + " " + which;
    return report;
  }
  if (!l.k || !r.k) {
    report.reason = "K-theory unavailable: " + (!l.k ? l.k_unavailable : r.k_unavailable);
    return report;
  }
  if (!(l.k->k0 == r.k->k0)) {
    report.verdict = ObstructionReport::Verdict::NotConjugate;
    report.reason = "K0 differs: " + l.k->k0.to_string() + " vs " + r.k->k0.to_string();
  } else if (!(l.k->k1 == r.k->k1)) {
    report.verdict = ObstructionReport::Verdict::NotConjugate;
    report.reason = "K1 differs: " + l.k->k1.to_string() + " vs " + r.k->k1.to_string();
  } else {
    report.reason = "identical K-theory: K0 = " + l.k->k0.to_string() +
                    ", K1 = " + l.k->k1.to_string();
  }
  return report;
}

}  // namespace ultrashift
