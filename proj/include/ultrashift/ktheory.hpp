#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ultrashift/abelian.hpp"
#include "ultrashift/matrix.hpp"
#include "ultrashift/ultragraph.hpp"

namespace ultrashift {

// Integer function on the vertices that is constant outside the tracked set:
// sum of coefficient[v] * delta_v over tracked v, plus tail * chi of the
// untracked remainder. Houses delta_v, chi_A and boundary values.
class ZGFunction {
 public:
  ZGFunction(std::vector<Index> tracked, Universe vertex_universe);

  std::span<const Index> tracked() const { return tracked_; }
  BigInt& coefficient(Index v);
  const BigInt& coefficient(Index v) const;
  const BigInt& tail_coefficient() const { return tail_; }
  void set_tail_coefficient(BigInt t);
  bool remainder_is_empty() const { return remainder_empty_; }

  ZGFunction& operator+=(const ZGFunction& rhs);
  ZGFunction& operator-=(const ZGFunction& rhs);
  bool operator==(const ZGFunction&) const = default;

 private:
  std::vector<Index> tracked_;
  std::vector<BigInt> coeff_;
  BigInt tail_ = 0;
  bool remainder_empty_;  // tracked set covers the whole (finite) universe
};

// chi_A in the tracked basis; throws UsageError("tracked set too small")
// when the boundary data of A escapes the tracked set.
ZGFunction chi(const IndexSet& a, std::vector<Index> tracked);

// delta_v - sum over e in s^-1(v) of chi_{r(e)}, for a regular vertex v.
ZGFunction delta_relation(const Ultragraph& g, Index v, std::vector<Index> tracked);

// Tracked vertex set at truncation level n: every vertex below the tail
// start, all exceptional boundary data, the tail range boundary, and the
// sources of the first n tail edges. Finite universes track everything.
std::vector<Index> tracked_vertices(const Ultragraph& g, std::size_t n);

// Matrix of the boundary map on the tracked basis: one row per regular
// tracked vertex, one column per tracked vertex plus a final tau column when
// the untracked remainder is nonempty.
IntMatrix boundary_matrix(const Ultragraph& g, std::size_t n);

struct KTheory {
  FPAbelianGroup k0;
  FPAbelianGroup k1;
  std::size_t stabilized_at = 0;  // first n of the agreeing triple
  bool operator==(const KTheory&) const = default;
};

// Single truncation level (no stabilization check).
KTheory k_theory_at(const Ultragraph& g, std::size_t n);

// coker / ker at three consecutive levels starting from n_start, retrying
// with larger n until agreement or n_max; throws NotStabilizedError when the
// budget runs out.
KTheory k_theory(const Ultragraph& g, std::size_t n_start = 2, std::size_t n_max = 16);

}  // namespace ultrashift
