#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simdiag/cayley.hpp"
#include "simdiag/element_set.hpp"
#include "simdiag/enumerated_group.hpp"
#include "simdiag/errors.hpp"
#include "simdiag/generator_file.hpp"
#include "simdiag/permutation.hpp"

#include <algorithm>
#include <random>

using namespace simdiag;

namespace {

EnumeratedGroup a5() {
  return enumerate_group({Permutation::from_cycles(5, "(0 1 2)"),
                          Permutation::from_cycles(5, "(2 3 4)")});
}

// independent width oracle: iterated exact set products
std::vector<std::int32_t> oracle_distances(const EnumeratedGroup& g, const ElementSet& s) {
  std::vector<std::int32_t> dist(g.order(), -1);
  dist[EnumeratedGroup::identity()] = 0;
  ElementSet power = s;
  for (std::uint32_t m = 1; m <= g.order(); ++m) {
    bool changed = false;
    power.for_each([&](std::uint64_t e) {
      if (dist[e] == -1) {
        dist[e] = static_cast<std::int32_t>(m);
        changed = true;
      }
    });
    if (!changed && m > 1) break;
    power = set_product(g, power, s);
  }
  return dist;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p = Permutation::from_cycles(5, "(0 1 2)(3 4)");
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p.order() == 6);
  CHECK(p.cycle_string() == "(0 1 2)(3 4)");
  CHECK((p * p.inverse()).is_identity());
  CHECK_FALSE(p.is_even());
  CHECK(Permutation::from_cycles(5, "(0 1 2)").is_even());
  CHECK(Permutation::from_cycles(4, "()").is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 5)"), Error);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("enumerate A5") {
  EnumeratedGroup g = a5();
  CHECK(g.order() == 60);
  CHECK(g.degree() == 5);
  CHECK(g.images_of(0)[0] == 0);  // identity at index 0

  // closure sanity on random samples
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    ElemIdx a = rng() % g.order(), b = rng() % g.order();
    Permutation prod = g.element(a) * g.element(b);
    CHECK(g.find(prod).value() == g.mul(a, b));
    CHECK(g.mul(a, g.inv(a)) == EnumeratedGroup::identity());
  }
}

TEST_CASE("trivial and cap behaviour") {
  EnumeratedGroup one = enumerate_group({Permutation::identity(4)});
  CHECK(one.order() == 1);
  CHECK(one.num_classes() == 1);
  CHECK(one.classes()[0].size() == 1);

  CHECK_THROWS_AS(enumerate_group({Permutation::from_cycles(5, "(0 1 2)"),
                                   Permutation::from_cycles(5, "(2 3 4)")},
                                  30),
                  Error);
  CHECK_THROWS_AS(enumerate_group({Permutation::from_cycles(5, "(0 1)"),
                                   Permutation::from_cycles(4, "(0 1)")}),
                  Error);
}

TEST_CASE("conjugacy classes of A5") {
  EnumeratedGroup g = a5();
  auto classes = conjugacy_classes(g);
  REQUIRE(classes.size() == 5);
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 0;
  for (const auto& c : classes) {
    sizes.push_back(c.size());
    total += c.size();
    CHECK(g.order() % c.size() == 0);
    // members really are the conjugation orbit of the representative
    for (ElemIdx m : c.members) CHECK(g.class_of(m) == g.class_of(c.representative));
  }
  CHECK(total == g.order());
  CHECK(classes[0].representative == EnumeratedGroup::identity());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{1, 12, 12, 15, 20});
}

TEST_CASE("element order") {
  EnumeratedGroup g = a5();
  CHECK(g.element_order(EnumeratedGroup::identity()) == 1);
  ElemIdx c3 = g.find(Permutation::from_cycles(5, "(0 1 2)")).value();
  ElemIdx c5 = g.find(Permutation::from_cycles(5, "(0 1 2 3 4)")).value();
  CHECK(g.element_order(c3) == 3);
  CHECK(g.element_order(c5) == 5);
}

TEST_CASE("set products") {
  EnumeratedGroup g = a5();
  ElementSet identity_only(g.order());
  identity_only.set(EnumeratedGroup::identity());

  std::uint32_t invol_class = 0;
  for (std::uint32_t c = 1; c < g.num_classes(); ++c)
    if (g.element_order(g.classes()[c].representative) == 2) invol_class = c;
  ElementSet invs = ElementSet::of_class(g, invol_class);

  CHECK(set_product(g, identity_only, invs) == invs);
  CHECK(set_product(g, invs, ElementSet(g.order())).count() == 0);

  ElementSet sq = set_product(g, invs, invs);
  CHECK(sq.test(EnumeratedGroup::identity()));
  CHECK(sq.count() >= 45);

  // brute-force cross-check with raw permutation arithmetic
  ElementSet brute(g.order());
  for (ElemIdx a : invs.to_vector())
    for (ElemIdx b : invs.to_vector())
      brute.set(g.find(g.element(a) * g.element(b)).value());
  CHECK(brute == sq);
  CHECK(sq.count() == 60);  // regression: two involutions already reach all of A5
}

TEST_CASE("cayley eccentricity matches the set-product oracle") {
  EnumeratedGroup g = a5();
  for (std::uint32_t c = 1; c < g.num_classes(); ++c) {
    ElementSet s = ElementSet::of_class(g, c);
    auto res = cayley_eccentricity(g, s);
    auto oracle = oracle_distances(g, s);
    CHECK(res.dist == oracle);
  }
}

TEST_CASE("cayley eccentricity: known widths") {
  EnumeratedGroup g = a5();
  // every non-identity element as connection set: width 1
  ElementSet all(g.order());
  for (ElemIdx e = 1; e < g.order(); ++e) all.set(e);
  CHECK(cayley_eccentricity(g, all).width == 1);

  // the 5-cycle class has width 3
  ElemIdx c5 = g.find(Permutation::from_cycles(5, "(0 1 2 3 4)")).value();
  ElementSet s = ElementSet::of_class(g, g.class_of(c5));
  CHECK(cayley_eccentricity(g, s).width == 3);

  // a single 3-cycle generates only its cyclic group
  ElementSet single(g.order());
  single.set(g.find(Permutation::from_cycles(5, "(0 1 2)")).value());
  CHECK_THROWS_AS(cayley_eccentricity(g, single), Error);
  auto partial = cayley_distances(g, single);
  CHECK_FALSE(partial.generated);
}

TEST_CASE("subadditivity of distances for symmetric connection sets") {
  EnumeratedGroup g = a5();
  ElemIdx c3 = g.find(Permutation::from_cycles(5, "(0 1 2)")).value();
  ElementSet s = ElementSet::of_class(g, g.class_of(c3));
  auto res = cayley_eccentricity(g, s);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    ElemIdx a = rng() % g.order(), b = rng() % g.order();
    CHECK(res.dist[g.mul(a, b)] <= res.dist[a] + res.dist[b]);
  }
}

TEST_CASE("determinism of enumeration") {
  EnumeratedGroup g1 = a5();
  EnumeratedGroup g2 = a5();
  REQUIRE(g1.order() == g2.order());
  for (ElemIdx e = 0; e < g1.order(); ++e) {
    auto i1 = g1.images_of(e);
    auto i2 = g2.images_of(e);
    CHECK(std::equal(i1.begin(), i1.end(), i2.begin()));
  }
}

TEST_CASE("generator file parsing") {
  auto gens = parse_generator_text(
      "# comment\n"
      "degree 5\n"
      "(0 1 2)\n"
      "img 0 1 3 4 2\n",
      "inline");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0][0] == 1);
  CHECK(gens[1][2] == 3);
  CHECK(enumerate_group(gens).order() == 60);

  CHECK_THROWS_AS(parse_generator_text("degree 3\nimg 0 0 1\n", "bad"), Error);
  CHECK_THROWS_AS(parse_generator_text("(0 1)\n", "bad"), Error);
  CHECK_THROWS_AS(parse_generator_text("degree 3\n", "bad"), Error);
}

TEST_CASE("conjugation invariance helpers") {
  EnumeratedGroup g = a5();
  ElemIdx c3 = g.find(Permutation::from_cycles(5, "(0 1 2)")).value();
  ElementSet s = ElementSet::of_class(g, g.class_of(c3));
  CHECK(is_conjugation_invariant(g, s));
  ElementSet t = s;
  t.set(g.find(Permutation::from_cycles(5, "(0 1 2 3 4)")).value());
  CHECK_FALSE(is_conjugation_invariant(g, t));
  CHECK(is_conjugation_invariant(g, conjugation_closure(g, t)));

  // class products agree with raw set products on conjugation-invariant sets
  ElementSet prod = set_product(g, s, s);
  auto ids = class_set_product(g, classes_in(g, s), s);
  CHECK(set_of_classes(g, ids) == prod);
}
