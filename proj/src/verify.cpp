#include "simdiag/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "simdiag/characters.hpp"
#include "simdiag/diagonal.hpp"
#include "simdiag/errors.hpp"
#include "simdiag/widths.hpp"

namespace simdiag {

namespace {

// Regression values computed once with the brute-force oracles and frozen.
constexpr std::int64_t kFrozenA5FiveCycleTripleCount = 60;  // z = 1, one class thrice
constexpr std::uint32_t kFrozenOrbdiamD3A5 = 4;
constexpr std::uint32_t kFrozenAllPairsImpliedK = 3;  // = cn(A5): bound already decisive there

struct Ctx {
  const VerifyOptions& opt;
  std::vector<CheckResult> results;
  std::map<std::string, ConstructedGroup> groups;
  std::map<std::string, WidthReport> width_reports;

  explicit Ctx(const VerifyOptions& o) : opt(o) {}

  ConstructedGroup& group(const std::string& spec) {
    auto it = groups.find(spec);
    if (it == groups.end()) it = groups.emplace(spec, build_group(spec, opt.order_cap)).first;
    return it->second;
  }

  const WidthReport& widths(const std::string& spec) {
    auto it = width_reports.find(spec);
    if (it == width_reports.end()) {
      ConstructedGroup& cg = group(spec);
      WidthOptions wopt;
      wopt.threads = opt.threads;
      wopt.cn_cap = opt.cn_cap;
      it = width_reports.emplace(spec, group_widths(cg.group, cg.auts, cg.name, wopt)).first;
    }
    return it->second;
  }

  void add(const std::string& id, const std::string& claim, const std::string& expected,
           const std::string& computed, int criterion, bool skip = false) {
    CheckResult r;
    r.id = id;
    r.claim = claim;
    r.expected = expected;
    r.computed = computed;
    r.status = skip ? "skip" : (expected == computed ? "pass" : "fail");
    r.criterion = criterion;
    results.push_back(std::move(r));
  }

  template <typename T, typename U>
  void check_eq(const std::string& id, const std::string& claim, T expected, U computed,
                int criterion) {
    add(id, claim, std::to_string(expected), std::to_string(computed), criterion);
  }

  void check_bool(const std::string& id, const std::string& claim, bool expected, bool computed,
                  int criterion) {
    add(id, claim, expected ? "true" : "false", computed ? "true" : "false", criterion);
  }
};

std::string triple(std::uint32_t c, std::uint32_t c_i, std::uint32_t c_a) {
  return "c=" + std::to_string(c) + " c_i=" + std::to_string(c_i) + " c_a=" + std::to_string(c_a);
}

// ---- widths suite ---------------------------------------------------------

void suite_widths(Ctx& ctx) {
  struct Alt {
    int n;
    std::uint32_t c, c_i, c_a;
    int criterion;
  };
  for (auto [n, c, c_i, c_a, crit] : {Alt{5, 3, 3, 2, 1}, Alt{6, 3, 3, 2, 1},
                                      Alt{7, 3, 3, 3, 1}, Alt{8, 4, 4, 4, 0}}) {
    std::string spec = "A" + std::to_string(n);
    const auto& w = ctx.widths(spec);
    ctx.add("widths/" + spec, "conjugacy widths of " + spec, triple(c, c_i, c_a),
            triple(w.c, w.c_i, w.c_a), crit);
  }
  // the degree-10 projective model must agree with the pulled-back
  // realizations on 6 points
  ctx.check_eq("widths/A6-model", "c_A(A6) equals c_A of its projective model", ctx.widths("A6").c_a,
               ctx.widths("PSL2(9)").c_a, 1);

  for (int q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19}) {
    std::string spec = "PSL2(" + std::to_string(q) + ")";
    const auto& w = ctx.widths(spec);
    bool ca2 = (q % 4 == 1) || q == 4 || q == 16;
    ctx.add("widths/" + spec, "conjugacy widths of " + spec,
            triple(3, 3, ca2 ? 2 : 3), triple(w.c, w.c_i, w.c_a), 3);
    ctx.check_bool("lie-lower-bound/" + spec, "c_A(" + spec + ") >= 2", true, w.c_a >= 2, 0);
  }
  for (int q : {2, 3, 4}) {
    std::string spec = "PSL3(" + std::to_string(q) + ")";
    const auto& w = ctx.widths(spec);
    ctx.add("widths/" + spec, "conjugacy widths of " + spec, triple(3, 3, 3),
            triple(w.c, w.c_i, w.c_a), q == 3 ? 11 : 0);
    ctx.check_bool("lie-lower-bound/" + spec, "c_A(" + spec + ") >= 3", true, w.c_a >= 3, 0);
  }

  // chain inequality c_A <= c_i <= c <= cn at the maxima and per class
  for (const auto& [spec, w] : ctx.width_reports) {
    bool chain = w.c_a <= w.c_i && w.c_i <= w.c && w.c <= w.cn;
    for (const auto& row : w.classes)
      chain = chain && row.c_x <= row.c_i && row.c_i <= row.c && row.c <= row.cn;
    ctx.check_bool("chain/" + spec, "c_A <= c_i <= c <= cn throughout " + spec, true, chain, 0);
  }

  // exceptional isomorphisms leave the class-size multiset invariant
  auto multiset = [](const EnumeratedGroup& g) {
    std::vector<std::uint64_t> sizes;
    for (const auto& c : g.classes()) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  ctx.check_bool("iso/PSL2(5)-A5", "PSL2(5) and A5 share class sizes", true,
                 multiset(ctx.group("PSL2(5)").group) == multiset(ctx.group("A5").group), 0);
  ctx.check_bool("iso/PSL3(2)-PSL2(7)", "PSL3(2) and PSL2(7) share class sizes", true,
                 multiset(ctx.group("PSL3(2)").group) == multiset(ctx.group("PSL2(7)").group), 0);

  // strongly real instances
  for (const auto& [spec, expected] :
       std::initializer_list<std::pair<const char*, bool>>{{"A5", true},
                                                           {"A6", true},
                                                           {"PSL2(8)", true},
                                                           {"PSL2(9)", true},
                                                           {"PSL2(17)", true},
                                                           {"A7", false},
                                                           {"A8", false},
                                                           {"PSL2(7)", false},
                                                           {"PSL2(11)", false}}) {
    bool computed = strongly_real_test(ctx.group(spec).group);
    ctx.check_bool(std::string("strongly-real/") + spec,
                   std::string(spec) + " products of two involutions cover the group", expected,
                   computed, 4);
  }

  // products of three l-cycles in A_n
  for (int n = 5; n <= 9; ++n) {
    const EnumeratedGroup& an = ctx.group("A" + std::to_string(n)).group;
    for (int l = 3; l <= n; l += 2) {
      bool expected = (2 * l >= n) || (n == 7 && l == 3);
      bool computed = three_l_cycles_test(an, l);
      ctx.check_bool("three-cycles/n" + std::to_string(n) + "-l" + std::to_string(l),
                     "A" + std::to_string(n) + " = (all " + std::to_string(l) + "-cycles)^3",
                     expected, computed, 10);
    }
  }

  // eigenspace-codimension machinery
  ctx.check_eq("nu/transvection-SL3(3)", "nu of a transvection in SL3(3)", 1,
               nu(transvection_matrix(3, 3)), 11);
  ctx.check_eq("nu/singer-SL3(3)", "nu of a Singer element in SL3(3)", 3,
               nu(singer_matrix(3, 3)), 11);
  ctx.check_eq("nu/singer-SL2(5)", "nu of a Singer element in SL2(5)", 2,
               nu(singer_matrix(2, 5)), 0);
  ctx.check_eq("nu/singer-SL4(2)", "nu of a Singer element in SL4(2)", 4,
               nu(singer_matrix(4, 2)), 0);
  {
    Rational r = nu_ratio_bound(nu(singer_matrix(3, 3)), nu(transvection_matrix(3, 3)));
    std::uint32_t ca = ctx.widths("PSL3(3)").c_a;
    ctx.check_bool("nu/ratio-PSL3(3)", "nu(T)/nu(S) = 3 <= c_A(PSL3(3))", true,
                   r.num == 3 && r.den == 1 && static_cast<double>(ca) >= r.value(), 11);
    Rational r2 = nu_ratio_bound(8, 2);
    ctx.check_bool("nu/ratio-8-2", "nu ratio 8/2 reduces to 4", true, r2.num == 4 && r2.den == 1,
                   0);
  }

  // noncommuting conjugate involutions
  for (const char* spec : {"A5", "A6", "A7", "A8", "PSL2(4)", "PSL2(5)", "PSL2(7)", "PSL2(8)",
                           "PSL2(9)", "PSL2(11)", "PSL2(13)"}) {
    const EnumeratedGroup& g = ctx.group(spec).group;
    bool all_found = true;
    for (const auto& cls : g.classes()) {
      if (g.element_order(cls.representative) != 2) continue;
      ElemIdx x = noncommuting_conjugate(g, cls.representative);
      ElemIdx w = g.mul(cls.representative, g.conj(cls.representative, x));
      all_found = all_found && g.element_order(w) > 2;
    }
    ctx.check_bool(std::string("involution-commutator/") + spec,
                   std::string("every involution of ") + spec +
                       " has a conjugate with product of order > 2",
                   true, all_found, 12);
  }
}

// ---- covering suite -------------------------------------------------------

void suite_covering(Ctx& ctx) {
  auto check_cn = [&](const std::string& spec, std::uint32_t expected) {
    ctx.check_eq("covering/" + spec, "cn(" + spec + ")", expected, ctx.widths(spec).cn, 2);
  };
  check_cn("A5", 3);
  check_cn("A6", 3);
  check_cn("A7", 3);
  check_cn("A8", 4);
  for (int q : {4, 5, 7, 8, 9, 11, 13}) check_cn("PSL2(" + std::to_string(q) + ")", 3);
  check_cn("PSL3(2)", 3);
  check_cn("PSL3(3)", 3);
  check_cn("PSL3(4)", 3);
}

// ---- diagonal suite -------------------------------------------------------

void suite_diagonal(Ctx& ctx) {
  // exact equalities for k = 2
  for (const char* spec : {"A5", "PSL2(7)"}) {
    ConstructedGroup& cg = ctx.group(spec);
    const auto& w = ctx.widths(spec);

    DiagonalGeometry tk(cg.group, 2, Variant::Tk, ctx.opt.point_cap);
    OrbdiamReport tk_report = orbdiam(tk, ctx.opt.threads);
    ctx.check_eq("diagonal/" + std::string(spec) + "-T2",
                 "orbital diameter of " + std::string(spec) + "^2 equals c_i", w.c_i,
                 tk_report.orbdiam, 5);

    DiagonalGeometry dkt(cg.group, 2, Variant::DkT, ctx.opt.point_cap, cg.auts);
    OrbdiamReport dkt_report = orbdiam(dkt, ctx.opt.threads);
    ctx.check_eq("diagonal/" + std::string(spec) + "-D2T",
                 "orbital diameter of D(2," + std::string(spec) + ") equals c_A", w.c_a,
                 dkt_report.orbdiam, 5);

    // per-class refinement: each Gamma_0^t in T^2 has diameter c_i(T, t)
    bool per_class = true;
    for (const auto& row : w.classes) {
      BoundCertificate cert = bound_certificate(tk, row.rep, row.c_i, w.c_i);
      per_class = per_class && cert.diameter == row.c_i;
    }
    ctx.check_bool("diagonal/" + std::string(spec) + "-T2-per-class",
                   "diam(Gamma_0^t) = c_i(T,t) for every class of " + std::string(spec), true,
                   per_class, 0);
  }

  // suborbit structure
  {
    ConstructedGroup& a5 = ctx.group("A5");
    DiagonalGeometry tk(a5.group, 2, Variant::Tk, ctx.opt.point_cap);
    Suborbits sub = suborbits(tk);
    std::multiset<std::uint64_t> sizes(sub.sizes.begin(), sub.sizes.end());
    bool ok = sub.rank() == 5 && sizes == std::multiset<std::uint64_t>{1, 12, 12, 15, 20};
    ctx.check_bool("diagonal/A5-T2-rank", "A5^2 suborbits are the conjugacy classes", true, ok, 0);

    DiagonalGeometry dkt(a5.group, 2, Variant::DkT, ctx.opt.point_cap, a5.auts);
    ctx.check_eq("diagonal/A5-D2T-rank", "rank of D(2,A5) after fusion", 4u,
                 suborbits(dkt).rank(), 0);
  }

  // bound sandwich over the primitive combinations for T = A5
  {
    ConstructedGroup& a5 = ctx.group("A5");
    const auto& w = ctx.widths("A5");
    struct Combo {
      int k;
      Variant variant;
    };
    for (auto [k, variant] : {Combo{2, Variant::Tk}, Combo{2, Variant::TkSk},
                              Combo{2, Variant::DkT}, Combo{3, Variant::TkSk},
                              Combo{3, Variant::DkT}}) {
      DiagonalGeometry geom(a5.group, k, variant, ctx.opt.point_cap,
                            variant == Variant::DkT ? std::span<const AutRealization>(a5.auts)
                                                    : std::span<const AutRealization>());
      bool all_ok = true;
      std::string detail;
      for (const auto& row : w.classes) {
        std::uint32_t c_x_t = variant == Variant::DkT ? row.c_x : row.c_i;
        try {
          bound_certificate(geom, row.rep, c_x_t, w.c_i);
        } catch (const Error& e) {
          all_ok = false;
          detail = e.what();
        }
      }
      ctx.check_bool("diagonal/sandwich-A5-k" + std::to_string(k) + "-" + variant_name(variant),
                     "M <= diam(Gamma_0^t) <= (k-1)c_i for every class" +
                         (detail.empty() ? "" : " [" + detail + "]"),
                     true, all_ok, 6);
    }

    // T^3 alone is not primitive: the defining orbital graph is disconnected
    DiagonalGeometry t3(a5.group, 3, Variant::Tk, ctx.opt.point_cap);
    std::vector<ElemIdx> tuple{EnumeratedGroup::identity(), w.classes.front().rep};
    OrbitalGraph gamma = orbital_graph(t3, t3.encode(tuple));
    bool disconnected = false;
    try {
      graph_diameter(gamma);
    } catch (const Error& e) {
      disconnected = e.kind() == ErrorKind::Disconnected;
    }
    ctx.check_bool("diagonal/A5-T3-disconnected",
                   "Gamma_0^t of A5^3 without coordinate moves is disconnected", true,
                   disconnected, 6);

    // strict lower bound at c_A = 2, k = 3
    DiagonalGeometry d3(a5.group, 3, Variant::DkT, ctx.opt.point_cap, a5.auts);
    OrbdiamReport d3_report = orbdiam(d3, ctx.opt.threads);
    ctx.check_bool("diagonal/D3A5-strict", "orbdiam(D(3,A5)) >= k+1 = 4", true,
                   d3_report.orbdiam >= 4, 7);
    ctx.check_eq("diagonal/D3A5-frozen", "orbdiam(D(3,A5)) regression value",
                 kFrozenOrbdiamD3A5, d3_report.orbdiam, 7);

    // an explicit constructed path stays within the claimed length
    DiagonalGeometry tksk(a5.group, 3, Variant::TkSk, ctx.opt.point_cap);
    ElemIdx three_cycle = w.classes[1].rep;
    std::vector<ElemIdx> target_tuple{w.classes[2].rep, w.classes[1].rep};
    DPoint target = tksk.encode(target_tuple);
    auto path = construct_path(tksk, three_cycle, target);
    bool path_ok = !path.empty() && path.back() == target &&
                   path.size() <= static_cast<std::size_t>(2 * w.c_i);
    ctx.check_bool("diagonal/path-A5-k3", "constructed path has length <= (k-1)c_i and is valid",
                   true, path_ok, 0);
  }

  // elements of pairwise fused length 3 exist when c_X(T) = 3
  {
    ConstructedGroup& a7 = ctx.group("A7");
    const auto& w = ctx.widths("A7");
    ElemIdx g_elt = kNoElem;
    for (const auto& row : w.classes)
      if (row.c_i == 3) {
        g_elt = row.rep;
        break;
      }
    bool found = false;
    ElemIdx found_x = kNoElem, found_y = kNoElem;
    if (g_elt != kNoElem) {
      FusedClass fused = fuse_class(a7.group, g_elt, FusionSpec::PmTClass);
      auto dist = cayley_distances(a7.group, fused.members);
      std::vector<ElemIdx> depth3;
      for (ElemIdx e = 0; e < a7.group.order(); ++e)
        if (dist.dist[e] == 3) depth3.push_back(e);
      for (std::size_t i = 0; i < depth3.size() && !found; ++i)
        for (std::size_t j = 0; j < depth3.size() && !found; ++j) {
          ElemIdx xy = a7.group.mul(a7.group.inv(depth3[i]), depth3[j]);
          if (dist.dist[xy] == 3) {
            found = true;
            found_x = depth3[i];
            found_y = depth3[j];
          }
        }
    }
    ctx.check_bool("diagonal/length3-triple-A7",
                   "A7 has x, y with l(x) = l(y) = l(x^-1 y) = 3", true, found, 0);

    // with the triple in hand, the k = 3 orbital graph around g has diameter
    // above 4; needs |A7|^2 points, so runs only when the cap allows
    std::uint64_t needed = static_cast<std::uint64_t>(a7.group.order()) * a7.group.order();
    if (found && ctx.opt.point_cap >= needed) {
      DiagonalGeometry geom(a7.group, 3, Variant::TkSk, ctx.opt.point_cap);
      std::vector<ElemIdx> tuple{EnumeratedGroup::identity(), g_elt};
      OrbitalGraph gamma = orbital_graph(geom, geom.encode(tuple));
      std::vector<ElemIdx> target_tuple{a7.group.inv(found_x),
                                        a7.group.mul(a7.group.inv(found_x), found_y)};
      bool exceeds = distance_exceeds(gamma, DiagonalGeometry::base_point(),
                                      geom.encode(target_tuple), 4);
      ctx.check_bool("diagonal/k3c3-A7", "diam(Gamma_0^g) > 4 in A7^3.S3", true, exceeds, 0);
    } else {
      ctx.add("diagonal/k3c3-A7", "diam(Gamma_0^g) > 4 in A7^3.S3 (needs point cap >= |A7|^2)",
              "true", "skipped", 0, /*skip=*/true);
    }
  }
}

// ---- characters suite -----------------------------------------------------

void suite_characters(Ctx& ctx) {
  struct TableSpec {
    const char* spec;
    std::vector<std::uint32_t> degrees;
  };
  for (const auto& [spec, degrees] :
       {TableSpec{"A5", {1, 3, 3, 4, 5}}, TableSpec{"PSL2(7)", {1, 3, 3, 6, 7, 8}}}) {
    const EnumeratedGroup& g = ctx.group(spec).group;
    CharacterTable table = dixon_table(g, ctx.opt.table_cap);

    std::ostringstream want, got;
    for (auto d : degrees) want << d << ' ';
    for (auto d : table.degrees) got << d << ' ';
    ctx.add(std::string("chartable/") + spec + "-degrees",
            std::string("irreducible degrees of ") + spec, want.str(), got.str(), 9);

    double res = std::max(table.row_orthogonality_residual(),
                          table.column_orthogonality_residual());
    ctx.check_bool(std::string("chartable/") + spec + "-orthogonality",
                   std::string("orthogonality residual of ") + spec + " below 1e-8", true,
                   res < 1e-8, 9);

    bool degrees_divide = true;
    for (auto d : table.degrees) degrees_divide = degrees_divide && g.order() % d == 0;
    ctx.check_bool(std::string("chartable/") + spec + "-degree-divides",
                   "every degree divides the group order", true, degrees_divide, 0);

    // exhaustive d <= 3 cross-validation against the convolution counts
    std::uint64_t mismatches = 0, zero_cases = 0, evaluated = 0;
    double worst_residual = 0;
    const std::uint32_t nc = g.num_classes();
    std::vector<std::uint32_t> tuple;
    auto run_tuple = [&](std::span<const std::uint32_t> ids) {
      auto counts = structure_count_vector(g, ids);
      for (ElemIdx z = 0; z < g.order(); ++z) {
        // counts are class functions of z; one representative per class is enough
        if (g.classes()[g.class_of(z)].representative != z) continue;
        SolutionCount sc = frobenius_count(g, table, ids, z);
        ++evaluated;
        worst_residual = std::max(worst_residual, sc.residual);
        if (sc.rounded != counts[z]) ++mismatches;
        if (counts[z] == 0) ++zero_cases;
      }
    };
    for (std::uint32_t a = 0; a < nc; ++a) {
      tuple = {a};
      run_tuple(tuple);
      for (std::uint32_t b = 0; b < nc; ++b) {
        tuple = {a, b};
        run_tuple(tuple);
        for (std::uint32_t c = 0; c < nc; ++c) {
          tuple = {a, b, c};
          run_tuple(tuple);
        }
      }
    }
    ctx.check_eq(std::string("frobenius/") + spec + "-mismatches",
                 "formula counts equal convolution counts for all d <= 3 tuples", 0ull,
                 mismatches, 8);
    ctx.check_bool(std::string("frobenius/") + spec + "-residual",
                   "worst rounding residual below 1e-4", true, worst_residual < 1e-4, 8);
    ctx.check_bool(std::string("frobenius/") + spec + "-zero-cases",
                   "tuples with zero solutions agree as well", true, zero_cases > 0, 0);
  }

  // pinned instances in A5
  {
    const EnumeratedGroup& g = ctx.group("A5").group;
    CharacterTable table = dixon_table(g, ctx.opt.table_cap);
    std::uint32_t invol = 0, fives = 0;
    for (std::uint32_t c = 1; c < g.num_classes(); ++c) {
      if (g.element_order(g.classes()[c].representative) == 2) invol = c;
      if (g.element_order(g.classes()[c].representative) == 5 && !fives) fives = c;
    }
    std::vector<std::uint32_t> pair{invol, invol};
    ctx.check_eq("frobenius/A5-involution-identity",
                 "pairs of involutions multiplying to 1 in A5", 15ll,
                 structure_count_bruteforce(g, pair, EnumeratedGroup::identity()), 0);
    std::vector<std::uint32_t> five_triple{fives, fives, fives};
    ctx.check_eq("frobenius/A5-five-cycle-triple",
                 "triples from one 5-cycle class multiplying to 1 in A5",
                 kFrozenA5FiveCycleTripleCount,
                 structure_count_bruteforce(g, five_triple, EnumeratedGroup::identity()), 0);

    MembershipBound mb = corollary_membership(g, table, fives, fives, 3);
    ctx.check_bool("corollary/A5-five-cubed", "character bound places 5-cycles inside C^3", true,
                   mb.implied, 0);
    bool all_pairs = true;
    for (std::uint32_t c = 1; c < g.num_classes() && all_pairs; ++c)
      for (std::uint32_t d = 1; d < g.num_classes() && all_pairs; ++d)
        all_pairs = corollary_membership(g, table, c, d, kFrozenAllPairsImpliedK).implied;
    ctx.check_bool("corollary/A5-all-pairs",
                   "bound implies membership for every class pair at k = " +
                       std::to_string(kFrozenAllPairsImpliedK),
                   true, all_pairs, 0);
  }
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
  Ctx ctx(opt);
  bool all = suite == "all";
  if (all || suite == "widths") suite_widths(ctx);
  if (all || suite == "covering") suite_covering(ctx);
  if (all || suite == "diagonal") suite_diagonal(ctx);
  if (all || suite == "characters") suite_characters(ctx);
  if (ctx.results.empty()) fail(ErrorKind::Usage, "unknown suite: " + suite);
  return ctx.results;
}

Json verify_json(const std::string& suite, const std::vector<CheckResult>& results) {
  Json j;
  j["suite"] = suite;
  Json checks = Json::array();
  std::uint64_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    Json c;
    c["id"] = r.id;
    c["claim"] = r.claim;
    c["expected"] = r.expected;
    c["computed"] = r.computed;
    c["status"] = r.status;
    checks.push_back(std::move(c));
    if (r.status == "pass") ++passed;
    if (r.status == "fail") ++failed;
    if (r.status == "skip") ++skipped;
  }
  j["checks"] = std::move(checks);
  j["passed"] = passed;
  j["failed"] = failed;
  j["skipped"] = skipped;
  return j;
}

}  // namespace simdiag
