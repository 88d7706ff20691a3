#pragma once

#include <cstdint>
#include <vector>

#include "simdiag/enumerated_group.hpp"

namespace simdiag {

// Bitset over the element indices of an EnumeratedGroup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::uint64_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet of_class(const EnumeratedGroup& g, std::uint32_t class_idx);
  static ElementSet of_members(std::uint64_t universe, const std::vector<ElemIdx>& members);
  static ElementSet full(std::uint64_t universe);

  std::uint64_t universe() const { return universe_; }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::uint64_t count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == universe_; }

  ElementSet& operator|=(const ElementSet& o);
  ElementSet& operator&=(const ElementSet& o);
  bool operator==(const ElementSet& o) const = default;
  bool contains(const ElementSet& o) const;  // o subset of *this

  std::vector<ElemIdx> to_vector() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        fn(static_cast<std::uint64_t>((w << 6) + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::uint64_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// {a*b : a in A, b in B} by direct expansion.
ElementSet set_product(const EnumeratedGroup& g, const ElementSet& a, const ElementSet& b);

// True iff the set is a union of whole conjugacy classes.
bool is_conjugation_invariant(const EnumeratedGroup& g, const ElementSet& s);

// Smallest conjugation-invariant superset.
ElementSet conjugation_closure(const EnumeratedGroup& g, ElementSet s);

// Class ids fully contained in a conjugation-invariant set.
std::vector<std::uint32_t> classes_in(const EnumeratedGroup& g, const ElementSet& s);

// Exact product of a conjugation-invariant set (given by its class ids) with
// a conjugation-invariant set S, returned as class ids. Uses the identity
// D*S = closure(d*S) for a class D = d^G, which shrinks the |D|*|S| expansion
// to one |S| pass per class.
std::vector<std::uint32_t> class_set_product(const EnumeratedGroup& g,
                                             const std::vector<std::uint32_t>& classes,
                                             const ElementSet& s);

ElementSet set_of_classes(const EnumeratedGroup& g, const std::vector<std::uint32_t>& classes);

}  // namespace simdiag
