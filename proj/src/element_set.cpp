#include "simdiag/element_set.hpp"

#include <algorithm>

#include "simdiag/errors.hpp"

namespace simdiag {

ElementSet ElementSet::of_class(const EnumeratedGroup& g, std::uint32_t class_idx) {
  ElementSet s(g.order());
  for (ElemIdx e : g.classes()[class_idx].members) s.set(e);
  return s;
}

ElementSet ElementSet::of_members(std::uint64_t universe, const std::vector<ElemIdx>& members) {
  ElementSet s(universe);
  for (ElemIdx e : members) s.set(e);
  return s;
}

ElementSet ElementSet::full(std::uint64_t universe) {
  ElementSet s(universe);
  for (std::uint64_t i = 0; i < universe; ++i) s.set(i);
  return s;
}

std::uint64_t ElementSet::count() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return n;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

bool ElementSet::contains(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((o.words_[i] & ~words_[i]) != 0) return false;
  return true;
}

std::vector<ElemIdx> ElementSet::to_vector() const {
  std::vector<ElemIdx> out;
  out.reserve(count());
  for_each([&](std::uint64_t i) { out.push_back(static_cast<ElemIdx>(i)); });
  return out;
}

ElementSet set_product(const EnumeratedGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.order());
  auto bs = b.to_vector();
  a.for_each([&](std::uint64_t x) {
    for (ElemIdx y : bs) out.set(g.mul(static_cast<ElemIdx>(x), y));
  });
  return out;
}

bool is_conjugation_invariant(const EnumeratedGroup& g, const ElementSet& s) {
  std::vector<std::uint64_t> hits(g.num_classes(), 0);
  s.for_each([&](std::uint64_t e) { ++hits[g.class_of(static_cast<ElemIdx>(e))]; });
  for (std::uint32_t c = 0; c < g.num_classes(); ++c)
    if (hits[c] != 0 && hits[c] != g.classes()[c].size()) return false;
  return true;
}

ElementSet conjugation_closure(const EnumeratedGroup& g, ElementSet s) {
  ElementSet out(g.order());
  s.for_each([&](std::uint64_t e) {
    std::uint32_t c = g.class_of(static_cast<ElemIdx>(e));
    for (ElemIdx m : g.classes()[c].members) out.set(m);
  });
  return out;
}

std::vector<std::uint32_t> classes_in(const EnumeratedGroup& g, const ElementSet& s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < g.num_classes(); ++c)
    if (s.test(g.classes()[c].representative)) out.push_back(c);
  return out;
}

std::vector<std::uint32_t> class_set_product(const EnumeratedGroup& g,
                                             const std::vector<std::uint32_t>& classes,
                                             const ElementSet& s) {
  std::vector<bool> hit(g.num_classes(), false);
  auto sv = s.to_vector();
  for (std::uint32_t c : classes) {
    ElemIdx d = g.classes()[c].representative;
    for (ElemIdx y : sv) hit[g.class_of(g.mul(d, y))] = true;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < g.num_classes(); ++c)
    if (hit[c]) out.push_back(c);
  return out;
}

ElementSet set_of_classes(const EnumeratedGroup& g, const std::vector<std::uint32_t>& classes) {
  ElementSet out(g.order());
  for (std::uint32_t c : classes)
    for (ElemIdx m : g.classes()[c].members) out.set(m);
  return out;
}

}  // namespace simdiag
