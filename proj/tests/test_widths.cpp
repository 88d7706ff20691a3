#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simdiag/errors.hpp"
#include "simdiag/widths.hpp"

using namespace simdiag;

namespace {

ConstructedGroup& a5() {
  static ConstructedGroup cg = make_alternating(5);
  return cg;
}

ElemIdx elem(const EnumeratedGroup& g, const std::string& cycles) {
  return g.find(Permutation::from_cycles(g.degree(), cycles)).value();
}

}  // namespace

TEST_CASE("fuse_class sizes in A5") {
  const EnumeratedGroup& g = a5().group;
  ElemIdx five = elem(g, "(0 1 2 3 4)");

  FusedClass plain = fuse_class(g, five, FusionSpec::TClass);
  CHECK(plain.members.count() == 12);

  // 5-cycles are real in A5, so the +- closure does not grow the class
  FusedClass pm = fuse_class(g, five, FusionSpec::PmTClass);
  CHECK(pm.members.count() == 12);

  // conjugation by a transposition fuses the two 5-cycle classes
  FusedClass fused = fuse_class(g, five, FusionSpec::PmXClass, a5().auts);
  CHECK(fused.members.count() == 24);

  // an involution equals its inverse
  ElemIdx invol = elem(g, "(0 1)(2 3)");
  CHECK(fuse_class(g, invol, FusionSpec::PmTClass).members ==
        fuse_class(g, invol, FusionSpec::TClass).members);

  CHECK_THROWS_AS(fuse_class(g, EnumeratedGroup::identity(), FusionSpec::TClass), Error);

  // fused classes never contain the identity
  CHECK_FALSE(fused.members.test(EnumeratedGroup::identity()));
}

TEST_CASE("width_of known values") {
  const EnumeratedGroup& g = a5().group;
  ElemIdx five = elem(g, "(0 1 2 3 4)");
  CHECK(width_of(g, fuse_class(g, five, FusionSpec::TClass)) == 3);
  CHECK(width_of(g, fuse_class(g, five, FusionSpec::PmXClass, a5().auts)) == 2);
}

TEST_CASE("covering numbers per class") {
  const EnumeratedGroup& g = a5().group;
  std::uint32_t max_cn = 0;
  for (std::uint32_t c = 1; c < g.num_classes(); ++c)
    max_cn = std::max(max_cn, covering_number_of_class(g, c));
  CHECK(max_cn == 3);
  CHECK_THROWS_AS(covering_number_of_class(g, 0), Error);

  // a cyclic group never covers: the iteration must hit the cap
  EnumeratedGroup c4 = enumerate_group({Permutation::from_cycles(4, "(0 1 2 3)")});
  CHECK_THROWS_AS(covering_number_of_class(c4, 1, 8), Error);

  // cross-check the class-set iteration against raw set products
  for (std::uint32_t c = 1; c < g.num_classes(); ++c) {
    ElementSet power = ElementSet::of_class(g, c);
    std::uint32_t r = 1;
    while (!power.is_full()) {
      power = set_product(g, power, ElementSet::of_class(g, c));
      ++r;
    }
    CHECK(covering_number_of_class(g, c) == r);
  }
}

TEST_CASE("group_widths for A5") {
  WidthReport w = group_widths(a5().group, a5().auts, "A5");
  CHECK(w.c == 3);
  CHECK(w.c_i == 3);
  CHECK(w.c_a == 2);
  CHECK(w.cn == 3);
  CHECK(w.classes.size() == 4);
  for (const auto& row : w.classes) {
    CHECK(row.c_x <= row.c_i);
    CHECK(row.c_i <= row.c);
    CHECK(row.c <= row.cn);
  }
  // computed per class, so the report is deterministic across thread counts
  WidthOptions opt8;
  opt8.threads = 8;
  WidthReport w8 = group_widths(a5().group, a5().auts, "A5", opt8);
  REQUIRE(w8.classes.size() == w.classes.size());
  for (std::size_t i = 0; i < w.classes.size(); ++i) {
    CHECK(w.classes[i].c == w8.classes[i].c);
    CHECK(w.classes[i].cn == w8.classes[i].cn);
  }
}

TEST_CASE("strongly real instances") {
  CHECK(strongly_real_test(a5().group));
  CHECK_FALSE(strongly_real_test(make_alternating(7).group));
}

TEST_CASE("strongly real equals width <= 2 of the involution set") {
  for (int n : {5, 6, 7}) {
    EnumeratedGroup g = make_alternating(n).group;
    ElementSet involutions(g.order());
    for (ElemIdx e = 1; e < g.order(); ++e)
      if (g.element_order(e) == 2) involutions.set(e);
    auto res = cayley_distances(g, involutions);
    bool width_le_2 = res.generated && res.width <= 2;
    CHECK(strongly_real_test(g) == width_le_2);
  }
}

TEST_CASE("three l-cycles") {
  CHECK(three_l_cycles_test(5, 3));
  CHECK(three_l_cycles_test(5, 5));
  CHECK(three_l_cycles_test(6, 5));
  CHECK(three_l_cycles_test(7, 3));  // the exceptional pair
  CHECK_FALSE(three_l_cycles_test(8, 3));
  CHECK_THROWS_AS(three_l_cycles_test(4, 3), Error);
  CHECK_THROWS_AS(three_l_cycles_test(6, 4), Error);
}

TEST_CASE("noncommuting conjugate involutions") {
  const EnumeratedGroup& g = a5().group;
  ElemIdx u = elem(g, "(0 1)(2 3)");
  ElemIdx x = noncommuting_conjugate(g, u);
  std::uint32_t ord = g.element_order(g.mul(u, g.conj(u, x)));
  CHECK((ord == 3 || ord == 5));
  CHECK_THROWS_AS(noncommuting_conjugate(g, elem(g, "(0 1 2)")), Error);

  // abelian misuse: all conjugates commute
  EnumeratedGroup c2xc2 = enumerate_group(
      {Permutation::from_cycles(4, "(0 1)"), Permutation::from_cycles(4, "(2 3)")});
  CHECK_THROWS_AS(noncommuting_conjugate(c2xc2, c2xc2.find(Permutation::from_cycles(4, "(0 1)")).value()),
                  Error);
}

TEST_CASE("length_l") {
  const EnumeratedGroup& g = a5().group;
  ElemIdx t = elem(g, "(0 1 2)");
  CHECK(length_l(g, t, FusionSpec::PmXClass, a5().auts, EnumeratedGroup::identity()) == 0);
  CHECK(length_l(g, t, FusionSpec::PmXClass, a5().auts, t) == 1);
  ElemIdx five = elem(g, "(0 1 2 3 4)");
  std::uint32_t l = length_l(g, t, FusionSpec::PmXClass, a5().auts, five);
  CHECK(l >= 1);
  CHECK(l <= 2);

  // triangle inequality for the fused length
  FusedClass fused = fuse_class(g, t, FusionSpec::PmXClass, a5().auts);
  auto dist = cayley_distances(g, fused.members);
  for (ElemIdx a = 0; a < g.order(); a += 5)
    for (ElemIdx b = 0; b < g.order(); b += 7)
      CHECK(dist.dist[g.mul(a, b)] <= dist.dist[a] + dist.dist[b]);
}

TEST_CASE("conjugate factorization") {
  const EnumeratedGroup& g = a5().group;
  ElemIdx t = elem(g, "(0 1 2)");
  FusedClass fused = fuse_class(g, t, FusionSpec::PmTClass);
  auto dist = cayley_distances(g, fused.members);
  for (ElemIdx target = 1; target < g.order(); target += 3) {
    auto factors = conjugate_factorization(g, fused, target);
    CHECK(factors.size() == static_cast<std::size_t>(dist.dist[target]));
    ElemIdx acc = EnumeratedGroup::identity();
    for (ElemIdx f : factors) {
      CHECK(fused.members.test(f));
      acc = g.mul(acc, f);
    }
    CHECK(acc == target);
  }
}
