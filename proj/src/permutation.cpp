#include "simdiag/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "simdiag/errors.hpp"

namespace simdiag {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      fail(ErrorKind::Parse, "image list is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::string& text) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(ErrorKind::Parse, "expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail(ErrorKind::Parse, "expected point index in cycle notation: " + text);
      unsigned long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
        ++pos;
      }
      if (v >= degree) fail(ErrorKind::Parse, "cycle point out of range: " + text);
      cycle.push_back(static_cast<Point>(v));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) fail(ErrorKind::Parse, "unterminated cycle: " + text);
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (img[from] != from) fail(ErrorKind::Parse, "point repeated across cycles: " + text);
      img[from] = to;
    }
    skip_ws();
  }
  // The per-cycle repetition check above does not catch everything (e.g. a
  // point fixed by one cycle and moved by a later one), so validate fully.
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = rhs.images_[images_[i]];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<Point>(i);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    Point j = static_cast<Point>(i);
    do {
      cycle.push_back(j);
      seen[j] = true;
      j = images_[j];
    } while (j != i);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles()) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t m = 1;
  for (const auto& c : cycles()) {
    std::size_t l = c.size();
    m = std::lcm(m, l);
  }
  return m;
}

std::string Permutation::cycle_string() const { return cycle_string_of(images_); }

std::string cycle_string_of(std::span<const Point> images) {
  std::ostringstream os;
  std::vector<bool> seen(images.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i] || images[i] == i) continue;
    any = true;
    os << '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    do {
      if (!first) os << ' ';
      first = false;
      os << j;
      seen[j] = true;
      j = images[j];
    } while (j != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace simdiag
