#include "ultrashift/index_set.hpp"

#include <algorithm>

namespace ultrashift {

namespace {

void require_same_universe(const IndexSet& a, const IndexSet& b) {
  if (!(a.universe() == b.universe())) {
    throw UsageError("index sets live in different universes: " + a.universe().to_string() +
                     " vs " + b.universe().to_string());
  }
}

std::vector<Index> sorted_unique(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Index> merge(std::span<const Index> a, std::span<const Index> b) {
  std::vector<Index> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Index> meet(std::span<const Index> a, std::span<const Index> b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Index> minus(std::span<const Index> a, std::span<const Index> b) {
  std::vector<Index> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Index Universe::size() const {
  if (!finite_) throw UsageError("infinite universe has no size");
  return value_;
}

std::string Universe::to_string() const {
  if (finite_) return "finite(" + std::to_string(value_) + ")";
  return value_ == 0 ? "infinite" : "infinite(from " + std::to_string(value_) + ")";
}

IndexSet::IndexSet(const Universe& u, Kind kind, std::vector<Index> support)
    : universe_(u), kind_(kind), support_(std::move(support)) {}

IndexSet IndexSet::make(const Universe& u, Kind kind, std::vector<Index> support) {
  support = sorted_unique(std::move(support));
  for (Index i : support) {
    if (!u.admits(i)) {
      throw UsageError("index " + std::to_string(i) + " outside universe " + u.to_string());
    }
  }
  if (u.is_finite() && kind == Kind::Cofinite) {
    // Finite universes keep the canonical form Finite.
    std::vector<Index> members;
    members.reserve(u.size() - support.size());
    auto it = support.begin();
    for (Index i = 0; i < u.size(); ++i) {
      if (it != support.end() && *it == i) {
        ++it;
      } else {
        members.push_back(i);
      }
    }
    return IndexSet(u, Kind::Finite, std::move(members));
  }
  return IndexSet(u, kind, std::move(support));
}

IndexSet IndexSet::all(const Universe& u) { return excluding(u, {}); }

IndexSet IndexSet::of(const Universe& u, std::vector<Index> members) {
  return make(u, Kind::Finite, std::move(members));
}

IndexSet IndexSet::excluding(const Universe& u, std::vector<Index> excluded) {
  return make(u, Kind::Cofinite, std::move(excluded));
}

bool IndexSet::contains(Index i) const {
  if (!universe_.admits(i)) return false;
  bool in_support = std::binary_search(support_.begin(), support_.end(), i);
  return kind_ == Kind::Finite ? in_support : !in_support;
}

bool IndexSet::is_empty() const {
  if (kind_ == Kind::Cofinite) return false;  // infinite universe by canonical form
  return support_.empty();
}

bool IndexSet::is_infinite() const { return kind_ == Kind::Cofinite; }

std::optional<Index> IndexSet::cardinality() const {
  if (kind_ == Kind::Cofinite) return std::nullopt;
  return support_.size();
}

IndexSet IndexSet::complement() const {
  return make(universe_, kind_ == Kind::Finite ? Kind::Cofinite : Kind::Finite, support_);
}

std::vector<Index> IndexSet::first(std::size_t n) const {
  if (kind_ == Kind::Finite) {
    auto end = support_.begin() + static_cast<std::ptrdiff_t>(std::min(n, support_.size()));
    return std::vector<Index>(support_.begin(), end);
  }
  std::vector<Index> out;
  auto it = support_.begin();
  for (Index i = universe_.min_index(); out.size() < n; ++i) {
    while (it != support_.end() && *it < i) ++it;
    if (it != support_.end() && *it == i) continue;
    out.push_back(i);
  }
  return out;
}

std::vector<Index> IndexSet::members() const {
  if (kind_ == Kind::Cofinite) throw UsageError("cannot enumerate an infinite set");
  return support_;
}

std::string IndexSet::to_string(const std::string& p) const {
  if (kind_ == Kind::Cofinite && support_.empty()) return "all";
  if (kind_ == Kind::Finite && support_.empty()) return "none";
  std::string out = kind_ == Kind::Finite ? "finite(" : "cofinite(";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i > 0) out += ',';
    out += p + std::to_string(support_[i]);
  }
  out += ')';
  return out;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  require_same_universe(a, b);
  using K = IndexSet::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite)
    return IndexSet::make(a.universe_, K::Finite, merge(a.support_, b.support_));
  if (a.kind_ == K::Cofinite && b.kind_ == K::Cofinite)
    return IndexSet::make(a.universe_, K::Cofinite, meet(a.support_, b.support_));
  const IndexSet& fin = a.kind_ == K::Finite ? a : b;
  const IndexSet& cof = a.kind_ == K::Finite ? b : a;
  return IndexSet::make(a.universe_, K::Cofinite, minus(cof.support_, fin.support_));
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  require_same_universe(a, b);
  return set_union(a.complement(), b.complement()).complement();
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  return set_intersection(a, b.complement());
}

}  // namespace ultrashift
