#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simdiag/constructions.hpp"
#include "simdiag/errors.hpp"

#include <algorithm>

using namespace simdiag;

namespace {

std::vector<std::uint64_t> class_size_multiset(const EnumeratedGroup& g) {
  std::vector<std::uint64_t> sizes;
  for (const auto& c : g.classes()) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("alternating groups") {
  CHECK(make_alternating(5).group.order() == 60);
  CHECK(make_alternating(7).group.order() == 2520);
  ConstructedGroup a6 = make_alternating(6);
  CHECK(a6.group.order() == 360);
  // odd transposition plus the two pulled-back exceptional realizations
  CHECK(a6.auts.size() == 3);
  CHECK(make_alternating(6).group.num_classes() == 7);
  CHECK_THROWS_AS(make_alternating(10), Error);
  CHECK_THROWS_AS(make_alternating(2), Error);
}

TEST_CASE("symmetric group") {
  CHECK(make_symmetric(4).group.order() == 24);
  CHECK(make_symmetric(5).group.order() == 120);
}

TEST_CASE("psl2 family") {
  struct Case {
    int q;
    std::uint64_t order;
    std::size_t num_auts;
  };
  for (auto [q, order, num_auts] : {Case{4, 60, 1}, Case{5, 60, 1}, Case{7, 168, 1},
                                    Case{8, 504, 1}, Case{9, 360, 2}, Case{11, 660, 1}}) {
    ConstructedGroup cg = make_psl2(q);
    CHECK(cg.group.order() == order);
    CHECK(cg.group.degree() == static_cast<std::size_t>(q + 1));
    CHECK(cg.auts.size() == num_auts);
  }
  CHECK_THROWS_AS(make_psl2(6), Error);
  CHECK_THROWS_AS(make_psl2(3), Error);
}

TEST_CASE("pgl2") {
  CHECK(make_pgl2(5).group.order() == 120);
  CHECK(make_pgl2(7).group.order() == 336);
}

TEST_CASE("psl3 family") {
  ConstructedGroup p2 = make_psl3(2);
  CHECK(p2.group.order() == 168);
  CHECK(p2.group.degree() == 7);

  ConstructedGroup p3 = make_psl3(3);
  CHECK(p3.group.order() == 5616);
  CHECK(p3.group.degree() == 13);

  ConstructedGroup p4 = make_psl3(4);
  CHECK(p4.group.order() == 20160);
  CHECK(p4.group.degree() == 21);
  CHECK(p4.auts.size() == 3);  // diagonal, field, graph

  CHECK_THROWS_AS(make_psl3(5), Error);
}

TEST_CASE("exceptional isomorphisms by class-size multiset") {
  CHECK(class_size_multiset(make_psl2(5).group) == class_size_multiset(make_alternating(5).group));
  CHECK(class_size_multiset(make_psl3(2).group) == class_size_multiset(make_psl2(7).group));
  CHECK(class_size_multiset(make_psl2(9).group) == class_size_multiset(make_alternating(6).group));
}

TEST_CASE("realizations are verified automorphisms") {
  // construction already verifies; spot-check that conjugated generators stay
  // in the group for the domain-permutation realizations
  ConstructedGroup a5 = make_alternating(5);
  REQUIRE(a5.auts.size() == 1);
  const auto& aut = a5.auts[0];
  REQUIRE(aut.domain_perm.has_value());
  for (std::size_t j = 0; j < a5.group.num_generators(); ++j) {
    Permutation conj = aut.domain_perm->inverse() * a5.group.generator(j) * *aut.domain_perm;
    CHECK(a5.group.find(conj).has_value());
  }

  // a non-normalizing permutation is rejected: S5 transposition doesn't
  // normalize the point stabilizer-ish subgroup generated by (0 1 2) alone
  EnumeratedGroup c3 = enumerate_group({Permutation::from_cycles(5, "(0 1 2)")});
  CHECK_THROWS_AS(realization_from_domain_perm(c3, Permutation::from_cycles(5, "(2 3)"), "bad"),
                  Error);
}

TEST_CASE("find_isomorphism maps PSL2(5) onto A5") {
  ConstructedGroup a5 = make_alternating(5);
  ConstructedGroup p5 = make_psl2(5);
  auto phi = find_isomorphism(p5.group, a5.group);
  // multiplicativity on random pairs
  for (ElemIdx a = 0; a < 60; a += 7)
    for (ElemIdx b = 0; b < 60; b += 11)
      CHECK(phi[p5.group.mul(a, b)] == a5.group.mul(phi[a], phi[b]));
  CHECK_THROWS_AS(find_isomorphism(make_psl2(7).group, a5.group), Error);
}

TEST_CASE("group spec grammar") {
  CHECK(build_group("A5").group.order() == 60);
  CHECK(build_group("S4").group.order() == 24);
  CHECK(build_group("PSL2(7)").group.order() == 168);
  CHECK(build_group("PGL2(5)").group.order() == 120);
  CHECK(build_group("PSL3(2)").group.order() == 168);
  CHECK_THROWS_AS(build_group("Q8"), Error);
  CHECK_THROWS_AS(build_group("PSL2(six)"), Error);
  CHECK_THROWS_AS(build_group("file:/nonexistent/path.gens"), Error);
}

TEST_CASE("aut selectors") {
  ConstructedGroup a5 = make_alternating(5);
  CHECK(select_auts(a5, "inn").empty());
  CHECK(select_auts(a5, "aut").size() == 1);
  CHECK_THROWS_AS(select_auts(a5, "all"), Error);
}
