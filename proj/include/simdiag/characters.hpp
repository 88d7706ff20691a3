#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "simdiag/element_set.hpp"
#include "simdiag/enumerated_group.hpp"

namespace simdiag {

// Irreducible character table. Row 0 is the trivial character; remaining
// rows are sorted by (degree, rounded value vector). Columns follow the
// group's class order.
struct CharacterTable {
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint32_t> rep_orders;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint32_t> degrees;
  std::vector<std::vector<std::complex<double>>> values;
  double tolerance = 1e-8;

  std::size_t num_classes() const { return class_sizes.size(); }
  double row_orthogonality_residual() const;
  double column_orthogonality_residual() const;
};

// Burnside-Dixon: diagonalize the class-algebra structure constants modulo
// the least prime p = 1 (mod exponent) exceeding 2*sqrt(|G|), then lift the
// eigenvalues to complex roots of unity. Validates both orthogonality
// relations before returning.
CharacterTable dixon_table(const EnumeratedGroup& g, std::uint64_t table_cap = 25000);

// Exact number of tuples (x_1, ..., x_d) in C_1 x ... x C_d with product z,
// by d-1 indicator convolutions.
std::int64_t structure_count_bruteforce(const EnumeratedGroup& g,
                                        std::span<const std::uint32_t> class_ids, ElemIdx z,
                                        std::uint64_t work_cap = 100'000'000);
// Same, but the whole count vector over z at once.
std::vector<std::int64_t> structure_count_vector(const EnumeratedGroup& g,
                                                 std::span<const std::uint32_t> class_ids,
                                                 std::uint64_t work_cap = 100'000'000);

struct SolutionCount {
  double value = 0;
  std::int64_t rounded = 0;
  double residual = 0;
};

// Frobenius solution count evaluated from the character table; throws
// ResidualTooLarge when the rounding residual reaches 0.5.
SolutionCount frobenius_count(const EnumeratedGroup& g, const CharacterTable& table,
                              std::span<const std::uint32_t> class_ids, ElemIdx z);

struct MembershipBound {
  double sum_bound = 0;
  bool implied = false;
};

// One-sided criterion: if |sum_{chi != 1} chi(c)^k chi(d^{-1}) / chi(1)^{k-1}|
// is below 1, then D is contained in C^k. When implied and verify is set, the
// containment is re-checked with exact set products.
MembershipBound corollary_membership(const EnumeratedGroup& g, const CharacterTable& table,
                                     std::uint32_t c_idx, std::uint32_t d_idx, std::uint32_t k,
                                     bool verify = true);

}  // namespace simdiag
