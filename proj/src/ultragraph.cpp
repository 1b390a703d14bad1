#include "ultrashift/ultragraph.hpp"

#include <algorithm>
#include <limits>

namespace ultrashift {

namespace {

constexpr Index kMaxMaterializedBoundary = 1u << 20;

std::string edge_name(Index e) { return "e" + std::to_string(e); }
std::string vertex_name(Index v) { return "v" + std::to_string(v); }

}  // namespace

std::string HypothesisReport::failing() const {
  if (!infinite_edges) return "H1 (edge set is finite)";
  if (!range_preimage_complements_finite) return "H2 (some s^-1(r(e)) has infinite complement)";
  if (!source_fibers_finite_or_cofinite) return "H3 (some source fiber is neither finite nor cofinite)";
  if (!no_sinks) return "H4 (the ultragraph has sinks)";
  return "";
}

Ultragraph::Ultragraph(Universe vertex_universe, std::vector<ExceptionalEdge> exceptional,
                       std::optional<TailRule> tail)
    : vertex_universe_(vertex_universe),
      exceptional_(std::move(exceptional)),
      tail_(std::move(tail)),
      sinks_(IndexSet::none(vertex_universe)),
      hypotheses_() {
  std::sort(exceptional_.begin(), exceptional_.end(),
            [](const ExceptionalEdge& a, const ExceptionalEdge& b) { return a.edge < b.edge; });
  for (std::size_t i = 0; i < exceptional_.size(); ++i) by_edge_[exceptional_[i].edge] = i;
  validate();
  sinks_ = compute_sinks();
  hypotheses_ = compute_hypotheses();
}

void Ultragraph::validate() const {
  for (std::size_t i = 0; i + 1 < exceptional_.size(); ++i) {
    if (exceptional_[i].edge == exceptional_[i + 1].edge) {
      throw UsageError("duplicate edge index " + edge_name(exceptional_[i].edge));
    }
  }
  for (const ExceptionalEdge& e : exceptional_) {
    if (!vertex_universe_.admits(e.source)) {
      throw UsageError("source " + vertex_name(e.source) + " of " + edge_name(e.edge) +
                       " outside the vertex universe");
    }
    if (!(e.range.universe() == vertex_universe_)) {
      throw UsageError("range of " + edge_name(e.edge) + " declared over the wrong universe");
    }
    if (e.range.is_empty()) {
      throw UsageError("empty range on " + edge_name(e.edge));
    }
  }
  if (!tail_) return;
  const TailRule& t = *tail_;
  for (const ExceptionalEdge& e : exceptional_) {
    if (e.edge >= t.start) {
      throw UsageError("tail start must exceed exceptional edge " + edge_name(e.edge));
    }
  }
  if (t.is_identity()) {
    if (vertex_universe_.is_finite()) {
      throw UsageError("identity tail source needs an infinite vertex universe");
    }
    if (t.start < vertex_universe_.min_index()) {
      throw UsageError("identity tail start " + std::to_string(t.start) +
                       " pairs edge indices with vertices below the universe");
    }
  } else {
    Index v = std::get<TailRule::ConstantVertex>(t.source).vertex;
    if (!vertex_universe_.admits(v)) {
      throw UsageError("tail source " + vertex_name(v) + " outside the vertex universe");
    }
  }
  if (const auto* cr = std::get_if<TailRule::ConstantRange>(&t.range)) {
    if (!(cr->set.universe() == vertex_universe_)) {
      throw UsageError("tail range declared over the wrong universe");
    }
    if (cr->set.is_empty()) throw UsageError("empty tail range");
  } else if (vertex_universe_.is_finite()) {
    throw UsageError("uppertail range needs an infinite vertex universe");
  }
}

IndexSet Ultragraph::edge_set() const {
  Universe edges = edge_index_space();
  if (!tail_) {
    std::vector<Index> ids;
    ids.reserve(exceptional_.size());
    for (const ExceptionalEdge& e : exceptional_) ids.push_back(e.edge);
    return IndexSet::of(edges, std::move(ids));
  }
  std::vector<Index> gaps;
  for (Index i = 0; i < tail_->start; ++i) {
    if (!by_edge_.count(i)) gaps.push_back(i);
  }
  return IndexSet::excluding(edges, std::move(gaps));
}

bool Ultragraph::has_edge(Index e) const {
  if (by_edge_.count(e)) return true;
  return tail_ && e >= tail_->start;
}

Index Ultragraph::source(Index e) const {
  auto it = by_edge_.find(e);
  if (it != by_edge_.end()) return exceptional_[it->second].source;
  if (tail_ && e >= tail_->start) {
    if (tail_->is_identity()) return e;
    return std::get<TailRule::ConstantVertex>(tail_->source).vertex;
  }
  throw LookupError("unknown edge " + edge_name(e));
}

IndexSet Ultragraph::range(Index e) const {
  auto it = by_edge_.find(e);
  if (it != by_edge_.end()) return exceptional_[it->second].range;
  if (tail_ && e >= tail_->start) {
    if (const auto* cr = std::get_if<TailRule::ConstantRange>(&tail_->range)) return cr->set;
    Index offset = std::get<TailRule::UpperTail>(tail_->range).offset;
    if (e > std::numeric_limits<Index>::max() - offset) {
      throw CapacityError("uppertail range boundary overflows for " + edge_name(e));
    }
    Index cut = e + offset;  // r(e) = {v_j : j >= cut}
    Index low = vertex_universe_.min_index();
    if (cut > low && cut - low > kMaxMaterializedBoundary) {
      throw CapacityError("uppertail range boundary too large to materialize for " + edge_name(e));
    }
    std::vector<Index> excluded;
    for (Index j = low; j < cut; ++j) excluded.push_back(j);
    return IndexSet::excluding(vertex_universe_, std::move(excluded));
  }
  throw LookupError("unknown edge " + edge_name(e));
}

IndexSet Ultragraph::source_preimage(const IndexSet& vertices) const {
  if (!(vertices.universe() == vertex_universe_)) {
    throw UsageError("source_preimage argument lives in the wrong universe");
  }
  Universe edges = edge_index_space();
  IndexSet result = IndexSet::none(edges);
  if (tail_) {
    if (tail_->is_identity()) {
      // s(e_i) = v_i, so tail hits are {i >= start : i in A}.
      if (vertices.is_infinite()) {
        std::vector<Index> excluded;
        for (Index i = 0; i < tail_->start; ++i) excluded.push_back(i);
        for (Index i : vertices.support()) {
          if (i >= tail_->start) excluded.push_back(i);
        }
        result = IndexSet::excluding(edges, std::move(excluded));
      } else {
        std::vector<Index> hits;
        for (Index i : vertices.support()) {
          if (i >= tail_->start) hits.push_back(i);
        }
        result = IndexSet::of(edges, std::move(hits));
      }
    } else if (vertices.contains(std::get<TailRule::ConstantVertex>(tail_->source).vertex)) {
      std::vector<Index> below;
      for (Index i = 0; i < tail_->start; ++i) below.push_back(i);
      result = IndexSet::excluding(edges, std::move(below));
    }
  }
  std::vector<Index> hits;
  for (const ExceptionalEdge& e : exceptional_) {
    if (vertices.contains(e.source)) hits.push_back(e.edge);
  }
  return set_union(result, IndexSet::of(edges, std::move(hits)));
}

std::optional<std::vector<Index>> Ultragraph::outgoing_edges(Index v) const {
  if (!vertex_universe_.admits(v)) throw LookupError("unknown vertex " + vertex_name(v));
  std::vector<Index> out;
  for (const ExceptionalEdge& e : exceptional_) {
    if (e.source == v) out.push_back(e.edge);
  }
  if (tail_) {
    if (tail_->is_identity()) {
      if (v >= tail_->start) out.push_back(v);
    } else if (std::get<TailRule::ConstantVertex>(tail_->source).vertex == v) {
      return std::nullopt;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet Ultragraph::compute_sinks() const {
  IndexSet covered = IndexSet::none(vertex_universe_);
  std::vector<Index> srcs;
  for (const ExceptionalEdge& e : exceptional_) srcs.push_back(e.source);
  covered = IndexSet::of(vertex_universe_, std::move(srcs));
  if (tail_) {
    if (tail_->is_identity()) {
      std::vector<Index> below;
      for (Index v = vertex_universe_.min_index(); v < tail_->start; ++v) below.push_back(v);
      covered = set_union(covered, IndexSet::excluding(vertex_universe_, std::move(below)));
    } else {
      Index v = std::get<TailRule::ConstantVertex>(tail_->source).vertex;
      covered = set_union(covered, IndexSet::of(vertex_universe_, {v}));
    }
  }
  return covered.complement();
}

HypothesisReport Ultragraph::compute_hypotheses() const {
  HypothesisReport h{};
  h.infinite_edges = tail_.has_value();

  IndexSet all_edges = edge_set();
  h.range_preimage_complements_finite = true;
  for (const ExceptionalEdge& e : exceptional_) {
    if (set_difference(all_edges, source_preimage(e.range)).is_infinite()) {
      h.range_preimage_complements_finite = false;
    }
  }
  if (tail_) {
    if (const auto* cr = std::get_if<TailRule::ConstantRange>(&tail_->range)) {
      if (set_difference(all_edges, source_preimage(cr->set)).is_infinite()) {
        h.range_preimage_complements_finite = false;
      }
    } else if (!tail_->is_identity()) {
      // Uppertail ranges eventually exclude the constant source vertex, so
      // s^{-1}(r(e_i)) is eventually finite while the edge set is infinite.
      h.range_preimage_complements_finite = false;
    }
  }

  // Identity tails give pairwise distinct tail sources (every fiber finite);
  // constant-vertex tails give one cofinite fiber and finite fibers elsewhere.
  h.source_fibers_finite_or_cofinite = true;

  h.no_sinks = sinks_.is_empty();

  IndexSet non_sinks = sinks_.complement();
  h.ranges_contain_non_sink = true;
  for (const ExceptionalEdge& e : exceptional_) {
    if (set_intersection(e.range, non_sinks).is_empty()) h.ranges_contain_non_sink = false;
  }
  if (tail_) {
    if (const auto* cr = std::get_if<TailRule::ConstantRange>(&tail_->range)) {
      if (set_intersection(cr->set, non_sinks).is_empty()) h.ranges_contain_non_sink = false;
    } else {
      // {v_j : j >= i + c} meets the non-sinks for every i iff that set is unbounded.
      if (!non_sinks.is_infinite()) h.ranges_contain_non_sink = false;
    }
  }
  return h;
}

Classification Ultragraph::classify() const {
  Classification c{false, false, sinks_, IndexSet::none(vertex_universe_)};

  IndexSet emitting = sinks_.complement();
  c.regular_vertices = emitting;
  if (tail_ && !tail_->is_identity()) {
    Index v = std::get<TailRule::ConstantVertex>(tail_->source).vertex;
    c.regular_vertices = set_difference(emitting, IndexSet::of(vertex_universe_, {v}));
  }

  c.is_graph = true;
  for (const ExceptionalEdge& e : exceptional_) {
    if (e.range.cardinality() != std::optional<Index>(1)) c.is_graph = false;
  }
  if (tail_) {
    const auto* cr = std::get_if<TailRule::ConstantRange>(&tail_->range);
    if (!cr || cr->set.cardinality() != std::optional<Index>(1)) c.is_graph = false;
  }
  if (!c.is_graph) return c;

  if (emitting.cardinality() != std::optional<Index>(1)) return c;
  Index hub = emitting.support()[0];
  for (const ExceptionalEdge& e : exceptional_) {
    if (e.source != hub || !(e.range == IndexSet::of(vertex_universe_, {hub}))) return c;
  }
  if (tail_) {
    if (tail_->is_identity()) return c;
    if (std::get<TailRule::ConstantVertex>(tail_->source).vertex != hub) return c;
    if (!(std::get<TailRule::ConstantRange>(tail_->range).set == IndexSet::of(vertex_universe_, {hub}))) {
      return c;
    }
  }
  c.is_bouquet = true;
  return c;
}

ConditionL Ultragraph::condition_l(std::size_t max_loop_len) const {
  if (max_loop_len == 0) throw UsageError("max_loop_len must be at least 1");
  if (hypotheses_.infinite_edges && hypotheses_.range_preimage_complements_finite) {
    return {ConditionL::Status::Satisfied, "H1 and H2 hold", {}, 0};
  }

  std::vector<Index> pool;
  if (!tail_) {
    pool = edge_set().members();
  } else {
    pool = edges_up_to(tail_->start + max_loop_len + 8);
  }

  // A loop with no exit forces s^{-1}(r(alpha_i)) = {alpha_{i+1}} and a
  // sink-free range at every position, so such loops are exactly the cycles
  // of the partial successor map below.
  std::map<Index, std::optional<Index>> next_memo;
  auto forced_next = [&](Index e) -> std::optional<Index> {
    auto it = next_memo.find(e);
    if (it != next_memo.end()) return it->second;
    std::optional<Index> result;
    IndexSet r = range(e);
    if (set_intersection(r, sinks_).is_empty()) {
      IndexSet successors = source_preimage(r);
      if (successors.cardinality() == std::optional<Index>(1)) {
        result = successors.support()[0];
      }
    }
    next_memo[e] = result;
    return result;
  };
  for (Index e : pool) {
    std::vector<Index> walk{e};
    for (std::size_t step = 0; step < max_loop_len; ++step) {
      std::optional<Index> next = forced_next(walk.back());
      if (!next) break;
      if (*next == e) {
        return {ConditionL::Status::Violated, "loop without exit", walk, 0};
      }
      walk.push_back(*next);
    }
  }
  if (!tail_ && pool.size() <= max_loop_len) {
    return {ConditionL::Status::Satisfied, "every loop has an exit (exhaustive search)", {}, 0};
  }
  return {ConditionL::Status::Unknown, "no violating loop found up to the search bound", {},
          max_loop_len};
}

std::vector<Index> Ultragraph::edges_up_to(Index max_index) const {
  std::vector<Index> out;
  for (const ExceptionalEdge& e : exceptional_) {
    if (e.edge <= max_index) out.push_back(e.edge);
  }
  if (tail_) {
    for (Index i = tail_->start; i <= max_index; ++i) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ultrashift
