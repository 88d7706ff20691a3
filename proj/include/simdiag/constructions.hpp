#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simdiag/enumerated_group.hpp"
#include "simdiag/matrix.hpp"

namespace simdiag {

// A realization of an automorphism of the enumerated group, stored as the
// induced bijection on element indices. When the automorphism is conjugation
// by a permutation of the action domain, that permutation is kept too.
// Construction verifies the map is a bijection fixing the identity and
// multiplicative on every (element, generator) pair.
struct AutRealization {
  std::string label;
  std::vector<ElemIdx> element_map;
  std::optional<Permutation> domain_perm;

  ElemIdx apply(ElemIdx e) const { return element_map[e]; }
};

AutRealization realization_from_domain_perm(const EnumeratedGroup& g, Permutation pi,
                                            std::string label);
AutRealization realization_from_element_map(const EnumeratedGroup& g,
                                            std::vector<ElemIdx> map, std::string label);

struct ConstructedGroup {
  std::string name;
  EnumeratedGroup group;
  std::vector<AutRealization> auts;  // together with inner, generates Aut
};

// Alternating group on n points (3 <= n <= 9). Outer realizations: an odd
// transposition for every n, plus for n = 6 the two extra outer classes
// pulled back through an isomorphism with the projective model of degree 10.
ConstructedGroup make_alternating(int n, std::uint64_t order_cap = kDefaultOrderCap);
ConstructedGroup make_symmetric(int n, std::uint64_t order_cap = kDefaultOrderCap);

// PSL_2(q) on the q+1 projective points. Outer realizations: a projective
// diagonal element outside PSL for odd q, the field automorphism for q = p^e
// with e > 1.
ConstructedGroup make_psl2(int q, std::uint64_t order_cap = kDefaultOrderCap);
ConstructedGroup make_pgl2(int q, std::uint64_t order_cap = kDefaultOrderCap);

// PSL_3(q) on the q^2+q+1 projective points, q in {2, 3, 4}. Outer
// realizations: diagonal and field parts where nontrivial, and the duality
// x -> (x^T)^{-1} realized as a bijection of group elements via matrix
// reconstruction from a projective frame.
ConstructedGroup make_psl3(int q, std::uint64_t order_cap = kDefaultOrderCap);

ConstructedGroup make_from_file(const std::string& path,
                                std::uint64_t order_cap = kDefaultOrderCap);

// Group specification grammar: A<n>, S<n>, PSL2(<q>), PGL2(<q>), PSL3(<q>),
// file:<path>.
ConstructedGroup build_group(const std::string& spec,
                             std::uint64_t order_cap = kDefaultOrderCap);

// Automorphism selector: "inn" (empty list), "aut" (the constructed
// realizations), or "file:<path>" of normalizing permutations.
std::vector<AutRealization> select_auts(const ConstructedGroup& cg,
                                        const std::string& selector);

// Isomorphism as an index map (from-index -> to-index); throws NotFound.
std::vector<ElemIdx> find_isomorphism(const EnumeratedGroup& from, const EnumeratedGroup& to);

std::uint64_t alternating_order(int n);
std::uint64_t psl_order(int dim, int q);

}  // namespace simdiag
