#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultrashift/errors.hpp"

namespace ultrashift {

using Index = std::uint64_t;

// Ambient index space a set lives in. Finite universes are {0,...,N-1};
// infinite universes are {min,min+1,...} (vertex universes start at 1,
// edge index spaces at 0).
class Universe {
 public:
  static Universe finite(Index size) { return Universe(true, size); }
  static Universe infinite(Index min_index = 1) { return Universe(false, min_index); }

  bool is_finite() const { return finite_; }
  Index size() const;       // finite only
  Index min_index() const { return finite_ ? 0 : value_; }
  bool admits(Index i) const { return finite_ ? i < value_ : i >= value_; }

  bool operator==(const Universe&) const = default;
  std::string to_string() const;

 private:
  Universe(bool finite, Index value) : finite_(finite), value_(value) {}
  bool finite_;
  Index value_;  // size when finite, smallest index otherwise
};

// Canonical finite or cofinite subset of a Universe. Values are immutable;
// in finite universes the representation is always Finite.
class IndexSet {
 public:
  enum class Kind { Finite, Cofinite };

  static IndexSet none(const Universe& u) { return of(u, {}); }
  static IndexSet all(const Universe& u);
  // Members listed explicitly.
  static IndexSet of(const Universe& u, std::vector<Index> members);
  // Everything except the listed indices.
  static IndexSet excluding(const Universe& u, std::vector<Index> excluded);

  Kind kind() const { return kind_; }
  const Universe& universe() const { return universe_; }
  // Members if Finite, excluded members if Cofinite; strictly increasing.
  std::span<const Index> support() const { return support_; }

  bool contains(Index i) const;
  bool is_empty() const;
  bool is_infinite() const;
  // Number of members, or nullopt when infinite.
  std::optional<Index> cardinality() const;

  IndexSet complement() const;
  // First n members in increasing order (fewer if the set is smaller).
  std::vector<Index> first(std::size_t n) const;
  // All members; throws UsageError when infinite.
  std::vector<Index> members() const;

  bool operator==(const IndexSet&) const = default;

  // "all", "none", "finite(p1,p2)", "cofinite(p1)" with an optional element
  // prefix ("v" for vertex sets in presentation files).
  std::string to_string(const std::string& element_prefix = "") const;

  friend IndexSet set_union(const IndexSet& a, const IndexSet& b);
  friend IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
  // a minus b.
  friend IndexSet set_difference(const IndexSet& a, const IndexSet& b);

 private:
  IndexSet(const Universe& u, Kind kind, std::vector<Index> support);
  static IndexSet make(const Universe& u, Kind kind, std::vector<Index> support);

  Universe universe_;
  Kind kind_;
  std::vector<Index> support_;
};

}  // namespace ultrashift
