#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ultrashift/index_set.hpp"

namespace ultrashift {

// Uniform rule for all edges e_i with i >= start.
struct TailRule {
  struct Identity {
    bool operator==(const Identity&) const = default;
  };  // s(e_i) = v_i
  struct ConstantVertex {
    Index vertex;
    bool operator==(const ConstantVertex&) const = default;
  };
  struct ConstantRange {
    IndexSet set;
    bool operator==(const ConstantRange&) const = default;
  };
  struct UpperTail {
    Index offset;  // r(e_i) = {v_j : j >= i + offset}
    bool operator==(const UpperTail&) const = default;
  };

  Index start = 0;
  std::variant<Identity, ConstantVertex> source;
  std::variant<ConstantRange, UpperTail> range;

  bool is_identity() const { return std::holds_alternative<Identity>(source); }
  bool is_upper_tail() const { return std::holds_alternative<UpperTail>(range); }
  bool operator==(const TailRule&) const = default;
};

struct ExceptionalEdge {
  Index edge;
  Index source;
  IndexSet range;
  bool operator==(const ExceptionalEdge&) const = default;
};

// Independent booleans of the structural hypotheses used across the theory.
struct HypothesisReport {
  bool infinite_edges;                      // H1
  bool range_preimage_complements_finite;   // H2: s^{-1}(r(e))^c finite for every e
  bool source_fibers_finite_or_cofinite;    // H3
  bool no_sinks;                            // H4
  bool ranges_contain_non_sink;             // H5 (needed by edge-shift membership)

  // Eligibility for the K-theory conjugacy obstruction (H1-H4).
  bool eligible() const {
    return infinite_edges && range_preimage_complements_finite && source_fibers_finite_or_cofinite &&
           no_sinks;
  }
  // First failing hypothesis, for report strings; empty when eligible.
  std::string failing() const;
  bool operator==(const HypothesisReport&) const = default;
};

struct Classification {
  bool is_graph;    // every range a singleton
  bool is_bouquet;  // graph, one emitting vertex, all edges loops at it
  IndexSet sinks;
  IndexSet regular_vertices;  // {v : 0 < |s^{-1}(v)| < infinity}
};

struct ConditionL {
  enum class Status { Satisfied, Violated, Unknown };
  Status status;
  std::string reason;
  std::vector<Index> witness_loop;  // when Violated
  std::size_t searched_up_to = 0;   // when Unknown
};

// Finite presentation of a possibly infinite ultragraph: finitely many
// exceptional edges plus an optional uniform tail. Immutable after
// construction; construction validates every invariant.
class Ultragraph {
 public:
  Ultragraph(Universe vertex_universe, std::vector<ExceptionalEdge> exceptional,
             std::optional<TailRule> tail);

  const Universe& vertex_universe() const { return vertex_universe_; }
  const std::vector<ExceptionalEdge>& exceptional_edges() const { return exceptional_; }
  const std::optional<TailRule>& tail() const { return tail_; }

  // Edge indices live in {0,1,2,...} regardless of the vertex universe.
  static Universe edge_index_space() { return Universe::infinite(0); }
  IndexSet edge_set() const;
  IndexSet vertex_set() const { return IndexSet::all(vertex_universe_); }
  bool has_edge(Index e) const;
  bool has_infinitely_many_edges() const { return tail_.has_value(); }

  Index source(Index e) const;   // throws LookupError on unknown edges
  IndexSet range(Index e) const;

  // s^{-1}(A) as a canonical edge set.
  IndexSet source_preimage(const IndexSet& vertices) const;
  // s^{-1}(v) enumerated; nullopt when infinite (constant-vertex tails).
  std::optional<std::vector<Index>> outgoing_edges(Index v) const;

  IndexSet sinks() const { return sinks_; }
  const HypothesisReport& hypotheses() const { return hypotheses_; }
  Classification classify() const;
  ConditionL condition_l(std::size_t max_loop_len) const;

  // Edges with index <= max_index, ascending (test/sampling helper).
  std::vector<Index> edges_up_to(Index max_index) const;

  bool operator==(const Ultragraph&) const = default;

 private:
  void validate() const;
  IndexSet compute_sinks() const;
  HypothesisReport compute_hypotheses() const;

  Universe vertex_universe_;
  std::vector<ExceptionalEdge> exceptional_;  // sorted by edge index
  std::optional<TailRule> tail_;
  std::map<Index, std::size_t> by_edge_;
  IndexSet sinks_;
  HypothesisReport hypotheses_;
};

}  // namespace ultrashift
