#include "simdiag/widths.hpp"

#include <algorithm>

#include "simdiag/errors.hpp"
#include "simdiag/parallel.hpp"

namespace simdiag {

FusedClass fuse_class(const EnumeratedGroup& g, ElemIdx t, FusionSpec spec,
                      std::span<const AutRealization> auts) {
  if (t == EnumeratedGroup::identity())
    fail(ErrorKind::Usage, "fused class of the identity is not defined");
  FusedClass out;
  out.base = t;
  out.spec = spec;

  std::vector<bool> in(g.num_classes(), false);
  std::vector<std::uint32_t> work{g.class_of(t)};
  in[work[0]] = true;
  const bool with_inverse = spec != FusionSpec::TClass;
  const bool with_auts = spec == FusionSpec::PmXClass;
  for (std::size_t head = 0; head < work.size(); ++head) {
    std::uint32_t c = work[head];
    auto push = [&](std::uint32_t d) {
      if (!in[d]) {
        in[d] = true;
        work.push_back(d);
      }
    };
    if (with_inverse) push(g.inverse_class(c));
    if (with_auts)
      for (const auto& aut : auts)
        push(g.class_of(aut.apply(g.classes()[c].representative)));
  }
  std::sort(work.begin(), work.end());
  out.class_ids = std::move(work);
  out.members = set_of_classes(g, out.class_ids);
  return out;
}

std::uint32_t width_of(const EnumeratedGroup& g, const FusedClass& c) {
  return cayley_eccentricity(g, c.members).width;
}

std::uint32_t covering_number_of_class(const EnumeratedGroup& g, std::uint32_t class_idx,
                                       std::uint32_t cap) {
  if (class_idx == 0 || g.classes()[class_idx].representative == EnumeratedGroup::identity())
    fail(ErrorKind::Usage, "covering number of the trivial class is not defined");
  ElementSet class_set = ElementSet::of_class(g, class_idx);
  std::vector<std::uint32_t> power{class_idx};
  const std::uint32_t all = g.num_classes();
  for (std::uint32_t r = 1; r <= cap; ++r) {
    if (power.size() == all) return r;
    power = class_set_product(g, power, class_set);
  }
  fail(ErrorKind::CapExceeded, "covering-number iteration passed cap " + std::to_string(cap));
}

WidthReport group_widths(const EnumeratedGroup& g, std::span<const AutRealization> auts,
                         const std::string& name, const WidthOptions& opt) {
  WidthReport report;
  report.group = name;
  report.order = g.order();

  const std::uint32_t nc = g.num_classes();
  std::vector<ClassWidthRecord> rows(nc);
  std::vector<bool> computed(nc, false);

  parallel_for(nc, opt.threads, [&](std::size_t ci) {
    if (ci == 0) return;  // trivial class
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) return;
    const auto& cls = g.classes()[ci];
    ClassWidthRecord row;
    row.class_idx = static_cast<std::uint32_t>(ci);
    row.rep = cls.representative;
    row.size = cls.size();
    row.rep_order = g.element_order(cls.representative);
    row.c = width_of(g, fuse_class(g, cls.representative, FusionSpec::TClass));
    row.c_i = width_of(g, fuse_class(g, cls.representative, FusionSpec::PmTClass));
    row.c_x = width_of(g, fuse_class(g, cls.representative, FusionSpec::PmXClass, auts));
    row.cn = covering_number_of_class(g, static_cast<std::uint32_t>(ci), opt.cn_cap);
    rows[ci] = row;
    computed[ci] = true;
  });

  for (std::uint32_t ci = 1; ci < nc; ++ci) {
    if (!computed[ci]) {
      report.incomplete = true;
      continue;
    }
    report.classes.push_back(rows[ci]);
    report.c = std::max(report.c, rows[ci].c);
    report.c_i = std::max(report.c_i, rows[ci].c_i);
    report.c_a = std::max(report.c_a, rows[ci].c_x);
    report.cn = std::max(report.cn, rows[ci].cn);
  }
  return report;
}

bool strongly_real_test(const EnumeratedGroup& g) {
  if (g.order() == 1) return true;
  std::vector<std::uint32_t> involution_classes;
  for (std::uint32_t c = 1; c < g.num_classes(); ++c)
    if (g.element_order(g.classes()[c].representative) == 2) involution_classes.push_back(c);
  if (involution_classes.empty()) return false;
  ElementSet involutions = set_of_classes(g, involution_classes);
  auto squared = class_set_product(g, involution_classes, involutions);

  std::vector<bool> covered(g.num_classes(), false);
  covered[g.class_of(EnumeratedGroup::identity())] = true;
  for (auto c : involution_classes) covered[c] = true;
  for (auto c : squared) covered[c] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool three_l_cycles_test(const EnumeratedGroup& alternating, int l) {
  const EnumeratedGroup& g = alternating;
  // all l-cycles: cycle type (l, 1^{n-l})
  ElementSet cycles_set(g.order());
  std::uint64_t found = 0;
  for (ElemIdx e = 1; e < g.order(); ++e) {
    auto img = g.images_of(e);
    int moved = 0;
    for (std::size_t p = 0; p < img.size(); ++p)
      if (img[p] != p) ++moved;
    if (moved != l) continue;
    if (static_cast<int>(g.element_order(e)) != l) continue;
    cycles_set.set(e);
    ++found;
  }
  if (found == 0) fail(ErrorKind::Usage, "no l-cycles in the group");
  auto power = classes_in(g, cycles_set);
  power = class_set_product(g, power, cycles_set);
  power = class_set_product(g, power, cycles_set);
  return power.size() == g.num_classes();
}

bool three_l_cycles_test(int n, int l, std::uint64_t order_cap) {
  if (n < 5 || l % 2 == 0 || l > n) fail(ErrorKind::Usage, "need n >= 5, l odd, l <= n");
  return three_l_cycles_test(make_alternating(n, order_cap).group, l);
}

ElemIdx noncommuting_conjugate(const EnumeratedGroup& g, ElemIdx u) {
  if (u == EnumeratedGroup::identity() || g.element_order(u) != 2)
    fail(ErrorKind::Usage, "u must be an involution");
  for (ElemIdx x = 0; x < g.order(); ++x) {
    ElemIdx w = g.mul(u, g.conj(u, x));
    if (g.element_order(w) > 2) return x;
  }
  fail(ErrorKind::NotFound, "u commutes with all of its conjugates");
}

std::uint32_t length_l(const EnumeratedGroup& g, ElemIdx t, FusionSpec spec,
                       std::span<const AutRealization> auts, ElemIdx g_elt) {
  FusedClass c = fuse_class(g, t, spec, auts);
  auto r = cayley_distances(g, c.members);
  if (r.dist[g_elt] < 0)
    fail(ErrorKind::NotGenerating, "element not expressible in the fused class");
  return static_cast<std::uint32_t>(r.dist[g_elt]);
}

std::vector<ElemIdx> conjugate_factorization(const EnumeratedGroup& g, const FusedClass& c,
                                             ElemIdx target) {
  auto r = cayley_distances(g, c.members, /*want_parents=*/true);
  if (r.dist[target] < 0)
    fail(ErrorKind::FactorizationUnavailable, "target not reachable from the fused class");
  std::vector<ElemIdx> factors;
  for (ElemIdx e = target; e != EnumeratedGroup::identity(); e = r.parent[e])
    factors.push_back(r.via[e]);
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace simdiag
