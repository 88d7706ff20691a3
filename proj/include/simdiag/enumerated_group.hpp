#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simdiag/permutation.hpp"

namespace simdiag {

using ElemIdx = std::uint32_t;
inline constexpr ElemIdx kNoElem = static_cast<ElemIdx>(-1);
inline constexpr std::uint64_t kDefaultOrderCap = 2'000'000;

struct ConjugacyClass {
  ElemIdx representative = 0;          // least element index in the class
  std::vector<ElemIdx> members;        // sorted
  std::uint64_t size() const { return members.size(); }
};

// Fully enumerated finite permutation group. Element indices are assigned
// breadth-first from the identity (index 0), expanding by the generators in
// the order given; elements discovered in the same layer are ordered
// lexicographically by image array. Immutable after construction; all
// accessors are safe to call from concurrent readers.
class EnumeratedGroup {
 public:
  std::size_t degree() const { return degree_; }
  ElemIdx order() const { return order_; }
  std::size_t num_generators() const { return generators_.size(); }
  const Permutation& generator(std::size_t i) const { return generators_[i]; }
  ElemIdx generator_index(std::size_t i) const { return gen_index_[i]; }

  static constexpr ElemIdx identity() { return 0; }

  std::span<const Point> images_of(ElemIdx i) const {
    return {images_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation element(ElemIdx i) const;
  std::string cycle_string(ElemIdx i) const { return cycle_string_of(images_of(i)); }

  std::optional<ElemIdx> find(std::span<const Point> images) const;
  std::optional<ElemIdx> find(const Permutation& p) const { return find(p.images()); }

  // Product a*b ("apply a, then b"). Uses the generator-word of b when it is
  // short, falling back to image composition plus a hash lookup.
  ElemIdx mul(ElemIdx a, ElemIdx b) const;
  ElemIdx inv(ElemIdx a) const { return inverse_[a]; }
  ElemIdx mul_by_generator(ElemIdx a, std::size_t gen) const {
    return mul_gen_[static_cast<std::size_t>(a) * num_gens_ + gen];
  }
  // g^{-1} x g for the given generator.
  ElemIdx conj_by_generator(ElemIdx x, std::size_t gen) const {
    return conj_gen_[static_cast<std::size_t>(x) * num_gens_ + gen];
  }
  ElemIdx conj(ElemIdx x, ElemIdx g) const { return mul(mul(inverse_[g], x), g); }
  ElemIdx power(ElemIdx a, std::uint64_t e) const;

  std::uint32_t element_order(ElemIdx a) const;
  std::uint64_t exponent() const;  // lcm of class representative orders

  // BFS discovery witness: i = bfs_parent(i) * generator(bfs_generator(i))
  ElemIdx bfs_parent(ElemIdx i) const { return parent_[i]; }
  std::size_t bfs_generator(ElemIdx i) const { return via_gen_[i]; }

  std::span<const ConjugacyClass> classes() const { return classes_; }
  std::uint32_t num_classes() const { return static_cast<std::uint32_t>(classes_.size()); }
  std::uint32_t class_of(ElemIdx i) const { return class_of_[i]; }
  std::uint32_t inverse_class(std::uint32_t c) const { return inverse_class_[c]; }

  friend EnumeratedGroup enumerate_group(std::vector<Permutation> generators,
                                         std::uint64_t order_cap);

 private:
  struct IndexMap {
    std::vector<ElemIdx> slots;  // open addressing, kNoElem = empty
    std::size_t mask = 0;
    std::size_t count = 0;
  };

  void rebuild_index(std::size_t capacity);
  ElemIdx lookup(std::span<const Point> images) const;
  void insert_index(ElemIdx idx);
  void compute_classes();

  std::size_t degree_ = 0;
  std::size_t num_gens_ = 0;
  ElemIdx order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElemIdx> gen_index_;
  std::vector<Point> images_;  // order * degree, flat
  IndexMap index_;
  std::vector<ElemIdx> mul_gen_;   // order x num_gens
  std::vector<ElemIdx> conj_gen_;  // order x num_gens
  std::vector<ElemIdx> parent_;    // BFS witness
  std::vector<std::uint8_t> via_gen_;
  std::vector<std::uint16_t> depth_;
  std::vector<ElemIdx> inverse_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_class_;
  std::vector<ConjugacyClass> classes_;
};

// Enumerates the closure of the generators. Throws DegreeMismatch for mixed
// degrees and CapExceeded when the closure passes order_cap.
EnumeratedGroup enumerate_group(std::vector<Permutation> generators,
                                std::uint64_t order_cap = kDefaultOrderCap);

// Standalone wrapper matching the conjugacy-class operation: identity class
// first, remaining classes sorted by (size, representative index).
inline std::span<const ConjugacyClass> conjugacy_classes(const EnumeratedGroup& g) {
  return g.classes();
}

}  // namespace simdiag
