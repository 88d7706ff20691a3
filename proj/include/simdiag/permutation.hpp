#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace simdiag {

using Point = std::uint16_t;

// Permutation of {0, ..., degree-1} stored as an image list. Products act on
// the right: (a * b) means "apply a, then b".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);  // validates bijection

  static Permutation identity(std::size_t degree);
  // Parses "(0 1 2)(3 4)"; "()" or an empty string is the identity.
  static Permutation from_cycles(std::size_t degree, const std::string& text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool is_even() const;
  std::size_t order() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles only
  // Sorted multiset of cycle lengths > 1, e.g. a 3-cycle in S_5 gives {3}.
  std::vector<std::size_t> cycle_type() const;
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

std::string cycle_string_of(std::span<const Point> images);

}  // namespace simdiag
