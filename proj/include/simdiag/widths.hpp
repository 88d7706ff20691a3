#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simdiag/cayley.hpp"
#include "simdiag/constructions.hpp"
#include "simdiag/element_set.hpp"

namespace simdiag {

// Connection-set flavours of Definition-style widths: the class t^T, the
// inverse-closed class t^T u (t^-1)^T, and the fully fused t^{+-X} for a
// configured set of automorphism realizations.
enum class FusionSpec { TClass, PmTClass, PmXClass };

struct FusedClass {
  ElemIdx base = 0;
  FusionSpec spec = FusionSpec::TClass;
  std::vector<std::uint32_t> class_ids;  // classes whose union forms members
  ElementSet members;
};

FusedClass fuse_class(const EnumeratedGroup& g, ElemIdx t, FusionSpec spec,
                      std::span<const AutRealization> auts = {});

// Width of the group w.r.t. the fused class (eccentricity of the identity).
std::uint32_t width_of(const EnumeratedGroup& g, const FusedClass& c);

// Least r with C^r = G (exact r-fold product). The power stays a union of
// conjugacy classes, so the iteration runs over class ids.
std::uint32_t covering_number_of_class(const EnumeratedGroup& g, std::uint32_t class_idx,
                                       std::uint32_t cap = 64);

struct ClassWidthRecord {
  std::uint32_t class_idx = 0;
  ElemIdx rep = 0;
  std::uint64_t size = 0;
  std::uint32_t rep_order = 0;
  std::uint32_t c = 0;
  std::uint32_t c_i = 0;
  std::uint32_t c_x = 0;
  std::uint32_t cn = 0;
};

struct WidthReport {
  std::string group;
  std::uint64_t order = 0;
  std::vector<ClassWidthRecord> classes;  // nontrivial classes, class order
  std::uint32_t c = 0, c_i = 0, c_a = 0, cn = 0;
  bool incomplete = false;
};

struct WidthOptions {
  unsigned threads = 1;
  std::uint32_t cn_cap = 64;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

WidthReport group_widths(const EnumeratedGroup& g, std::span<const AutRealization> auts,
                         const std::string& name, const WidthOptions& opt = {});

// True iff every element is a product of at most two involutions.
bool strongly_real_test(const EnumeratedGroup& g);

// True iff every element of A_n is a product of exactly three l-cycles.
bool three_l_cycles_test(int n, int l, std::uint64_t order_cap = kDefaultOrderCap);
bool three_l_cycles_test(const EnumeratedGroup& alternating, int l);

// First x (in element order) with order(u * u^x) > 2; throws NotFound when
// no such x exists (u central, impossible in a simple group).
ElemIdx noncommuting_conjugate(const EnumeratedGroup& g, ElemIdx u);

// BFS distance of g in the Cayley graph on the fused class of t.
std::uint32_t length_l(const EnumeratedGroup& g, ElemIdx t, FusionSpec spec,
                       std::span<const AutRealization> auts, ElemIdx g_elt);

// Factors g as a product of members of the fused class, shortest first-found.
std::vector<ElemIdx> conjugate_factorization(const EnumeratedGroup& g, const FusedClass& c,
                                             ElemIdx target);

}  // namespace simdiag
