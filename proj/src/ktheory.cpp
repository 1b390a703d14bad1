#include "ultrashift/ktheory.hpp"

#include <algorithm>

namespace ultrashift {

namespace {

std::string vertex_name(Index v) { return "v" + std::to_string(v); }

void require_supported_tail(const Ultragraph& g) {
  if (g.tail() && g.tail()->is_upper_tail()) {
    throw TailNotSupportedError(
        "uppertail ranges vary with the edge index; no finite tracked set models Z_G");
  }
}

void require_finitely_generated(const Ultragraph& g) {
  if (g.sinks().is_infinite()) {
    throw NotFinitelyGeneratedError(
        "infinitely many sinks: coker(boundary) is not finitely generated");
  }
}

}  // namespace

ZGFunction::ZGFunction(std::vector<Index> tracked, Universe vertex_universe)
    : tracked_(std::move(tracked)), coeff_(tracked_.size()) {
  remainder_empty_ =
      vertex_universe.is_finite() && tracked_.size() == vertex_universe.size();
}

BigInt& ZGFunction::coefficient(Index v) {
  auto it = std::lower_bound(tracked_.begin(), tracked_.end(), v);
  if (it == tracked_.end() || *it != v) {
    throw UsageError("vertex " + vertex_name(v) + " is not tracked");
  }
  return coeff_[static_cast<std::size_t>(it - tracked_.begin())];
}

const BigInt& ZGFunction::coefficient(Index v) const {
  return const_cast<ZGFunction*>(this)->coefficient(v);
}

void ZGFunction::set_tail_coefficient(BigInt t) {
  if (remainder_empty_ && t != 0) {
    throw UsageError("tail coefficient is forced to 0 when the tracked set covers the universe");
  }
  tail_ = std::move(t);
}

ZGFunction& ZGFunction::operator+=(const ZGFunction& rhs) {
  if (tracked_ != rhs.tracked_) throw UsageError("mismatched tracked sets");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
  tail_ += rhs.tail_;
  return *this;
}

ZGFunction& ZGFunction::operator-=(const ZGFunction& rhs) {
  if (tracked_ != rhs.tracked_) throw UsageError("mismatched tracked sets");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
  tail_ -= rhs.tail_;
  return *this;
}

ZGFunction chi(const IndexSet& a, std::vector<Index> tracked) {
  ZGFunction f(std::move(tracked), a.universe());
  for (Index v : a.support()) {
    if (!std::binary_search(f.tracked().begin(), f.tracked().end(), v)) {
      throw UsageError("tracked set too small: boundary vertex " + vertex_name(v) + " escapes it");
    }
  }
  for (Index v : f.tracked()) {
    if (a.contains(v)) f.coefficient(v) = 1;
  }
  if (a.is_infinite() && !f.remainder_is_empty()) f.set_tail_coefficient(1);
  return f;
}

ZGFunction delta_relation(const Ultragraph& g, Index v, std::vector<Index> tracked) {
  require_supported_tail(g);
  std::optional<std::vector<Index>> out = g.outgoing_edges(v);
  if (!out || out->empty()) {
    throw UsageError("vertex " + vertex_name(v) + " is not regular");
  }
  ZGFunction f(std::move(tracked), g.vertex_universe());
  f.coefficient(v) = 1;
  for (Index e : *out) {
    std::vector<Index> t(f.tracked().begin(), f.tracked().end());
    f -= chi(g.range(e), std::move(t));
  }
  return f;
}

std::vector<Index> tracked_vertices(const Ultragraph& g, std::size_t n) {
  require_supported_tail(g);
  if (g.vertex_universe().is_finite()) {
    return IndexSet::all(g.vertex_universe()).members();
  }
  require_finitely_generated(g);
  IndexSet base = IndexSet::none(g.vertex_universe());
  auto add = [&](std::vector<Index> vs) {
    base = set_union(base, IndexSet::of(g.vertex_universe(), std::move(vs)));
  };
  for (const ExceptionalEdge& e : g.exceptional_edges()) {
    add({e.source});
    add(std::vector<Index>(e.range.support().begin(), e.range.support().end()));
  }
  const TailRule& tail = *g.tail();  // infinite universe without a tail has infinite sinks
  const IndexSet& tail_range = std::get<TailRule::ConstantRange>(tail.range).set;
  add(std::vector<Index>(tail_range.support().begin(), tail_range.support().end()));
  std::vector<Index> below;
  for (Index v = g.vertex_universe().min_index(); v < tail.start; ++v) below.push_back(v);
  add(std::move(below));
  if (tail.is_identity()) {
    std::vector<Index> firsts;
    for (std::size_t i = 0; i < n; ++i) firsts.push_back(tail.start + i);
    add(std::move(firsts));
  } else {
    add({std::get<TailRule::ConstantVertex>(tail.source).vertex});
  }
  return base.members();
}

IntMatrix boundary_matrix(const Ultragraph& g, std::size_t n) {
  if (n < 2) throw UsageError("truncation level must be at least 2");
  std::vector<Index> tracked = tracked_vertices(g, n);
  IndexSet regular = g.classify().regular_vertices;
  std::vector<Index> rows;
  for (Index v : tracked) {
    if (regular.contains(v)) rows.push_back(v);
  }
  bool remainder_empty =
      g.vertex_universe().is_finite() && tracked.size() == g.vertex_universe().size();
  std::size_t cols = tracked.size() + (remainder_empty ? 0 : 1);

  IntMatrix m(rows.size(), cols);
  for (std::size_t j = 0; j < tracked.size(); ++j) m.col_labels()[j] = vertex_name(tracked[j]);
  if (!remainder_empty) m.col_labels()[tracked.size()] = "tau";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.row_labels()[i] = vertex_name(rows[i]);
    ZGFunction rel = delta_relation(g, rows[i], tracked);
    for (std::size_t j = 0; j < tracked.size(); ++j) m.at(i, j) = rel.coefficient(tracked[j]);
    if (!remainder_empty) m.at(i, tracked.size()) = rel.tail_coefficient();
  }
  return m;
}

KTheory k_theory_at(const Ultragraph& g, std::size_t n) {
  IntMatrix m = boundary_matrix(g, n);
  SmithDecomposition snf = smith_normal_form(m);
  std::size_t rank = snf.rank();
  KTheory result;
  result.k0 = FPAbelianGroup(m.cols() - rank, snf.nontrivial_factors());
  result.k1 = FPAbelianGroup(m.rows() - rank, {});
  result.stabilized_at = n;
  return result;
}

KTheory k_theory(const Ultragraph& g, std::size_t n_start, std::size_t n_max) {
  if (n_start < 2) throw UsageError("truncation level must be at least 2");
  std::string disagreement;
  for (std::size_t n = n_start; n + 2 <= n_max; ++n) {
    KTheory a = k_theory_at(g, n);
    KTheory b = k_theory_at(g, n + 1);
    KTheory c = k_theory_at(g, n + 2);
    if (a.k0 == b.k0 && b.k0 == c.k0 && a.k1 == b.k1 && b.k1 == c.k1) {
      a.stabilized_at = n;
      return a;
    }
    disagreement = "n=" + std::to_string(n) + ": K0 " + a.k0.to_string() + " / " +
                   b.k0.to_string() + " / " + c.k0.to_string() + ", K1 " + a.k1.to_string() +
                   " / " + b.k1.to_string() + " / " + c.k1.to_string();
  }
  throw NotStabilizedError("K-theory did not stabilize up to n_max=" + std::to_string(n_max) +
                           " (last triple " + disagreement + ")");
}

}  // namespace ultrashift
