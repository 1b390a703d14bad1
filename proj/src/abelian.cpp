#include "ultrashift/abelian.hpp"

namespace ultrashift {

FPAbelianGroup::FPAbelianGroup(std::size_t rank, std::vector<BigInt> factors)
    : free_rank(rank), invariant_factors(std::move(factors)) {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] <= 1) throw UsageError("invariant factors must exceed 1");
    if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0) {
      throw UsageError("invariant factors must form a divisibility chain");
    }
  }
}

std::string FPAbelianGroup::to_string() const {
  std::string out = "Z^" + std::to_string(free_rank);
  for (const BigInt& d : invariant_factors) out += " (+) Z/" + d.str();
  return out;
}

}  // namespace ultrashift
