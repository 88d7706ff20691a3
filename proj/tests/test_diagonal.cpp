#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simdiag/diagonal.hpp"
#include "simdiag/errors.hpp"
#include "simdiag/widths.hpp"

#include <random>
#include <set>

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

TEST_CASE("geometry sizes and caps") {
  DiagonalGeometry g2(a5().group, 2, Variant::Tk, kDefaultPointCap);
  CHECK(g2.omega_size() == 60);
  DiagonalGeometry g3(a5().group, 3, Variant::TkSk, kDefaultPointCap);
  CHECK(g3.omega_size() == 3600);

  EnumeratedGroup psl28 = make_psl2(8).group;
  DiagonalGeometry big(psl28, 3, Variant::TkSk, kDefaultPointCap);
  CHECK(big.omega_size() == 254016);

  // 60^3 still fits under the default cap; 60^4 does not
  CHECK(DiagonalGeometry(a5().group, 4, Variant::TkSk, kDefaultPointCap).omega_size() == 216000);
  CHECK_THROWS_AS(DiagonalGeometry(a5().group, 5, Variant::TkSk, kDefaultPointCap), Error);
  CHECK_THROWS_AS(DiagonalGeometry(a5().group, 1, Variant::Tk, kDefaultPointCap), Error);
}

TEST_CASE("tuple action") {
  DiagonalGeometry geom(a5().group, 3, Variant::TkSk, kDefaultPointCap);
  const EnumeratedGroup& g = a5().group;
  ElemIdx t = elem(g, "(0 1 2)");

  // base * (1, 1, t) lands on the defining edge endpoint
  std::vector<ElemIdx> tup{EnumeratedGroup::identity(), EnumeratedGroup::identity(), t};
  DPoint p = geom.act_tuple(DiagonalGeometry::base_point(), tup);
  CHECK(geom.decode(p) == std::vector<ElemIdx>{EnumeratedGroup::identity(), t});

  // identity tuple fixes everything
  std::vector<ElemIdx> id3(3, EnumeratedGroup::identity());
  CHECK(geom.act_tuple(p, id3) == p);

  // the diagonal stabilizes the base point
  std::vector<ElemIdx> diag{t, t, t};
  CHECK(geom.act_tuple(DiagonalGeometry::base_point(), diag) ==
        DiagonalGeometry::base_point());
}

TEST_CASE("coordinate permutation action matches the k = 2 hand formula") {
  const EnumeratedGroup& g = a5().group;
  DiagonalGeometry geom(g, 2, Variant::TkSk, kDefaultPointCap);
  ElemIdx t = elem(g, "(0 1 2 3 4)");
  std::vector<ElemIdx> tup{t};
  DPoint p = geom.encode(tup);
  // D(1, t) swapped = D(t, 1) = D(1, t^{-1})
  DPoint swapped = geom.act_coord_perm(p, Permutation::from_cycles(2, "(0 1)"));
  CHECK(geom.decode(swapped) == std::vector<ElemIdx>{g.inv(t)});

  // identity permutation fixes the point
  CHECK(geom.act_coord_perm(p, Permutation::identity(2)) == p);
}

TEST_CASE("sigma = (1 k) sends (1,...,1,t) to the all-t-inverse tuple") {
  const EnumeratedGroup& g = a5().group;
  DiagonalGeometry geom(g, 3, Variant::TkSk, kDefaultPointCap);
  ElemIdx t = elem(g, "(0 1 2)");
  std::vector<ElemIdx> tup{EnumeratedGroup::identity(), t};
  DPoint p = geom.encode(tup);
  DPoint q = geom.act_coord_perm(p, Permutation::from_cycles(3, "(0 2)"));
  CHECK(geom.decode(q) == std::vector<ElemIdx>{g.inv(t), g.inv(t)});
}

TEST_CASE("inner automorphisms fix the base point") {
  ConstructedGroup& cg = a5();
  DiagonalGeometry geom(cg.group, 2, Variant::DkT, kDefaultPointCap, cg.auts);
  CHECK(geom.act_aut(DiagonalGeometry::base_point(), cg.auts[0]) ==
        DiagonalGeometry::base_point());
}

TEST_CASE("suborbits of A5^2 are the conjugacy classes") {
  DiagonalGeometry geom(a5().group, 2, Variant::Tk, kDefaultPointCap);
  Suborbits sub = suborbits(geom);
  CHECK(sub.rank() == 5);
  std::multiset<std::uint64_t> sizes(sub.sizes.begin(), sub.sizes.end());
  CHECK(sizes == std::multiset<std::uint64_t>{1, 12, 12, 15, 20});

  std::uint64_t total = 0;
  for (auto s : sub.sizes) total += s;
  CHECK(total == geom.omega_size());

  // with the full normalizer the 5-cycle classes fuse
  DiagonalGeometry dkt(a5().group, 2, Variant::DkT, kDefaultPointCap, a5().auts);
  CHECK(suborbits(dkt).rank() == 4);
}

TEST_CASE("orbital graph through a class point, k = 2") {
  const EnumeratedGroup& g = a5().group;
  DiagonalGeometry geom(g, 2, Variant::Tk, kDefaultPointCap);
  ElemIdx t = elem(g, "(0 1 2 3 4)");
  std::vector<ElemIdx> tup{t};
  OrbitalGraph graph = orbital_graph(geom, geom.encode(tup));

  // N(base) = t^T union (t^{-1})^T; 5-cycles are real so this is one class
  FusedClass pm = fuse_class(g, t, FusionSpec::PmTClass);
  std::set<DPoint> expect;
  pm.members.for_each([&](std::uint64_t e) { expect.insert(e); });
  std::set<DPoint> got(graph.base_neighbors.begin(), graph.base_neighbors.end());
  CHECK(expect == got);

  // closed under reversal
  for (DPoint s : graph.base_neighbors)
    CHECK(std::binary_search(graph.base_neighbors.begin(), graph.base_neighbors.end(),
                             geom.reversal(s)));

  CHECK(graph_diameter(graph) == 3);  // c_i(A5, 5-cycle)
  CHECK_THROWS_AS(orbital_graph(geom, DiagonalGeometry::base_point()), Error);
}

TEST_CASE("involution orbital of A5^2 has diameter 2") {
  const EnumeratedGroup& g = a5().group;
  DiagonalGeometry geom(g, 2, Variant::Tk, kDefaultPointCap);
  ElemIdx invol = elem(g, "(0 1)(2 3)");
  std::vector<ElemIdx> tup{invol};
  OrbitalGraph graph = orbital_graph(geom, geom.encode(tup));
  CHECK(graph_diameter(graph) == 2);  // c_i(A5, involution)
}

TEST_CASE("a complete orbital graph has diameter 1") {
  // S3 = D(1,...) stand-in: the diagonal action of a group whose nontrivial
  // classes fuse into everything; use the smallest case where one class plus
  // reversal covers all nonbase points: C3 with k = 2 under coordinate swap
  EnumeratedGroup c3 = enumerate_group({Permutation::from_cycles(3, "(0 1 2)")});
  DiagonalGeometry geom(c3, 2, Variant::TkSk, kDefaultPointCap);
  std::vector<ElemIdx> tup{c3.find(Permutation::from_cycles(3, "(0 1 2)")).value()};
  OrbitalGraph graph = orbital_graph(geom, geom.encode(tup));
  CHECK(graph.valency() == 2);  // both nonidentity points
  CHECK(graph_diameter(graph) == 1);
}

TEST_CASE("vertex transitivity: eccentricity independent of the start") {
  const EnumeratedGroup& g = a5().group;
  DiagonalGeometry geom(g, 3, Variant::TkSk, kDefaultPointCap);
  ElemIdx t = elem(g, "(0 1 2)");
  std::vector<ElemIdx> tup{EnumeratedGroup::identity(), t};
  OrbitalGraph graph = orbital_graph(geom, geom.encode(tup));
  std::uint32_t base_ecc = graph_diameter(graph);
  std::mt19937 rng(12345);
  for (int i = 0; i < 10; ++i) {
    DPoint start = rng() % geom.omega_size();
    CHECK(graph_eccentricity_from(graph, start) == base_ecc);
  }
}

TEST_CASE("disconnected detection for T^3 without coordinate moves") {
  const EnumeratedGroup& g = a5().group;
  DiagonalGeometry geom(g, 3, Variant::Tk, kDefaultPointCap);
  ElemIdx t = elem(g, "(0 1 2)");
  std::vector<ElemIdx> tup{EnumeratedGroup::identity(), t};
  OrbitalGraph graph = orbital_graph(geom, geom.encode(tup));
  CHECK_THROWS_AS(graph_diameter(graph), Error);
}

TEST_CASE("custom variant requires transitive coordinates for k >= 3") {
  const EnumeratedGroup& g = a5().group;
  std::vector<Permutation> fix_last{Permutation::from_cycles(3, "(0 1)")};
  CHECK_THROWS_AS(
      DiagonalGeometry(g, 3, Variant::Custom, kDefaultPointCap, {}, fix_last), Error);
  std::vector<Permutation> cycle{Permutation::from_cycles(3, "(0 1 2)")};
  DiagonalGeometry ok(g, 3, Variant::Custom, kDefaultPointCap, {}, cycle);
  CHECK(ok.omega_size() == 3600);
}

TEST_CASE("orbdiam equalities for k = 2") {
  const EnumeratedGroup& g = a5().group;
  WidthReport w = group_widths(g, a5().auts, "A5");

  DiagonalGeometry tk(g, 2, Variant::Tk, kDefaultPointCap);
  CHECK(orbdiam(tk).orbdiam == w.c_i);

  DiagonalGeometry dkt(g, 2, Variant::DkT, kDefaultPointCap, a5().auts);
  CHECK(orbdiam(dkt).orbdiam == w.c_a);
}

TEST_CASE("bound certificates") {
  const EnumeratedGroup& g = a5().group;
  WidthReport w = group_widths(g, a5().auts, "A5");
  DiagonalGeometry geom(g, 3, Variant::TkSk, kDefaultPointCap);
  for (const auto& row : w.classes) {
    BoundCertificate cert = bound_certificate(geom, row.rep, row.c_i, w.c_i);
    CHECK(cert.lower_m == row.c_i + 1);  // k = 3 odd
    CHECK(cert.upper_1 == 2 * w.c_i);
    CHECK(cert.upper_2 == 24 * 2 * w.c_i * w.c_i);
    CHECK(cert.diameter >= cert.lower_m);
    CHECK(cert.diameter <= cert.upper_1);
  }
}

TEST_CASE("construct_path") {
  const EnumeratedGroup& g = a5().group;
  DiagonalGeometry geom(g, 3, Variant::TkSk, kDefaultPointCap);
  ElemIdx t = elem(g, "(0 1 2)");

  CHECK(construct_path(geom, t, DiagonalGeometry::base_point()).empty());

  std::vector<ElemIdx> edge_tup{EnumeratedGroup::identity(), t};
  auto one = construct_path(geom, t, geom.encode(edge_tup));
  CHECK(one.size() == 1);
  CHECK(one[0] == geom.encode(edge_tup));

  WidthReport w = group_widths(g, a5().auts, "A5");
  std::mt19937 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    DPoint target = rng() % geom.omega_size();
    auto path = construct_path(geom, t, target);
    CHECK(path.size() <= static_cast<std::size_t>(2 * w.c_i));
    if (target != DiagonalGeometry::base_point()) CHECK(path.back() == target);
  }
}

TEST_CASE("dot export") {
  const EnumeratedGroup& g = a5().group;
  DiagonalGeometry geom(g, 2, Variant::Tk, kDefaultPointCap);
  ElemIdx t = elem(g, "(0 1)(2 3)");
  std::vector<ElemIdx> tup{t};
  OrbitalGraph graph = orbital_graph(geom, geom.encode(tup));
  std::string dot = dot_export(graph);
  CHECK(dot.rfind("graph orbital {", 0) == 0);
  CHECK(dot.find("--") != std::string::npos);
}
