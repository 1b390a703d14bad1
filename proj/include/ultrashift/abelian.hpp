#pragma once

#include <string>
#include <vector>

#include "ultrashift/matrix.hpp"

namespace ultrashift {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and every di > 1.
// The representation is canonical, so equality is isomorphism.
struct FPAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> invariant_factors;

  FPAbelianGroup() = default;
  FPAbelianGroup(std::size_t rank, std::vector<BigInt> factors);

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool has_torsion() const { return !invariant_factors.empty(); }
  bool operator==(const FPAbelianGroup&) const = default;

  // "Z^1 (+) Z/2", "Z^0".
  std::string to_string() const;
};

}  // namespace ultrashift
