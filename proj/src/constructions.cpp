#include "simdiag/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "simdiag/errors.hpp"
#include "simdiag/generator_file.hpp"

namespace simdiag {

namespace {

// --- projective space helpers -------------------------------------------

// Points of PG(n-1, q) as canonical row vectors: last nonzero coordinate 1.
// Indexed in increasing order of the integer encoding sum v_i q^i.
struct ProjectiveSpace {
  const GfField* field;
  int n;
  std::vector<std::vector<Fq>> points;
  std::unordered_map<std::uint32_t, Point> index;

  std::uint32_t encode(const std::vector<Fq>& v) const {
    std::uint32_t c = 0;
    for (int i = n - 1; i >= 0; --i) c = c * field->q() + v[i];
    return c;
  }

  std::vector<Fq> canonical(std::vector<Fq> v) const {
    int last = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) last = i;
    if (last < 0) fail(ErrorKind::Internal, "zero vector has no projective point");
    Fq scale = field->inv(v[last]);
    for (int i = 0; i < n; ++i) v[i] = field->mul(v[i], scale);
    return v;
  }

  Point point_of(const std::vector<Fq>& v) const {
    auto it = index.find(encode(canonical(v)));
    if (it == index.end()) fail(ErrorKind::Internal, "projective point not found");
    return it->second;
  }
};

ProjectiveSpace make_projective_space(int n, int q) {
  ProjectiveSpace s;
  s.field = &GfField::get(q);
  s.n = n;
  std::uint32_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint32_t>(q);
  for (std::uint32_t code = 1; code < total; ++code) {
    std::vector<Fq> v(n);
    std::uint32_t c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<Fq>(c % q);
      c /= q;
    }
    if (s.canonical(v) != v) continue;
    s.index.emplace(code, static_cast<Point>(s.points.size()));
    s.points.push_back(std::move(v));
  }
  return s;
}

Permutation perm_of_matrix(const ProjectiveSpace& s, const MatrixFq& m) {
  const GfField& F = *s.field;
  std::vector<Point> img(s.points.size());
  std::vector<Fq> w(s.n);
  for (std::size_t p = 0; p < s.points.size(); ++p) {
    const auto& v = s.points[p];
    for (int j = 0; j < s.n; ++j) {
      Fq acc = 0;
      for (int i = 0; i < s.n; ++i) acc = F.add(acc, F.mul(v[i], m.at(i, j)));
      w[j] = acc;
    }
    img[p] = s.point_of(w);
  }
  return Permutation(std::move(img));
}

Permutation frobenius_perm(const ProjectiveSpace& s) {
  std::vector<Point> img(s.points.size());
  for (std::size_t p = 0; p < s.points.size(); ++p) {
    std::vector<Fq> v = s.points[p];
    for (auto& x : v) x = s.field->frobenius(x);
    img[p] = s.point_of(v);
  }
  return Permutation(std::move(img));
}

MatrixFq elementary(int n, const GfField& F, int i, int j, Fq a) {
  MatrixFq m = MatrixFq::identity(n, F);
  m.at(i, j) = a;
  return m;
}

void check_order(const EnumeratedGroup& g, std::uint64_t expected, const std::string& name) {
  if (g.order() != expected)
    fail(ErrorKind::Internal, name + ": enumerated order " + std::to_string(g.order()) +
                                  " != expected " + std::to_string(expected));
}

// Reconstructs a matrix inducing the given point permutation, using the
// images of the frame e_1, ..., e_n, e_1+...+e_n. Result is unique up to a
// scalar, which is all the projective action needs.
MatrixFq matrix_of_perm(const ProjectiveSpace& s, std::span<const Point> perm,
                        const std::vector<Point>& frame) {
  const GfField& F = *s.field;
  int n = s.n;
  MatrixFq rows(n, F);
  for (int i = 0; i < n; ++i) {
    const auto& r = s.points[perm[frame[i]]];
    for (int j = 0; j < n; ++j) rows.at(i, j) = r[j];
  }
  const auto& ru = s.points[perm[frame[n]]];
  // solve (a_0..a_{n-1}) * rows = ru
  MatrixFq inv = rows.inverse();
  std::vector<Fq> coef(n);
  for (int j = 0; j < n; ++j) {
    Fq acc = 0;
    for (int i = 0; i < n; ++i) acc = F.add(acc, F.mul(ru[i], inv.at(i, j)));
    coef[j] = acc;
  }
  MatrixFq m(n, F);
  for (int i = 0; i < n; ++i) {
    if (coef[i] == 0) fail(ErrorKind::Internal, "degenerate frame image");
    for (int j = 0; j < n; ++j) m.at(i, j) = F.mul(coef[i], rows.at(i, j));
  }
  return m;
}

}  // namespace

// --- realizations ---------------------------------------------------------

namespace {

void verify_element_map(const EnumeratedGroup& g, const std::vector<ElemIdx>& map,
                        const std::string& label) {
  if (map.size() != g.order())
    fail(ErrorKind::Usage, "realization '" + label + "': wrong map size");
  if (map[EnumeratedGroup::identity()] != EnumeratedGroup::identity())
    fail(ErrorKind::Usage, "realization '" + label + "': identity not fixed");
  std::vector<bool> seen(g.order(), false);
  for (ElemIdx e = 0; e < g.order(); ++e) {
    if (seen[map[e]])
      fail(ErrorKind::Usage, "realization '" + label + "': not a bijection");
    seen[map[e]] = true;
  }
  for (ElemIdx e = 0; e < g.order(); ++e)
    for (std::size_t j = 0; j < g.num_generators(); ++j) {
      ElemIdx lhs = map[g.mul_by_generator(e, j)];
      ElemIdx rhs = g.mul(map[e], map[g.generator_index(j)]);
      if (lhs != rhs)
        fail(ErrorKind::Usage, "realization '" + label + "': not multiplicative");
    }
}

}  // namespace

AutRealization realization_from_domain_perm(const EnumeratedGroup& g, Permutation pi,
                                            std::string label) {
  if (pi.degree() != g.degree())
    fail(ErrorKind::Usage, "realization '" + label + "': degree mismatch");
  Permutation pinv = pi.inverse();
  std::vector<ElemIdx> map(g.order());
  std::vector<Point> conj(g.degree());
  for (ElemIdx e = 0; e < g.order(); ++e) {
    auto img = g.images_of(e);
    for (std::size_t p = 0; p < g.degree(); ++p)
      conj[p] = pi[img[pinv[static_cast<Point>(p)]]];
    auto found = g.find(conj);
    if (!found)
      fail(ErrorKind::Usage, "realization '" + label + "': permutation does not normalize the group");
    map[e] = *found;
  }
  AutRealization r{std::move(label), std::move(map), std::move(pi)};
  verify_element_map(g, r.element_map, r.label);
  return r;
}

AutRealization realization_from_element_map(const EnumeratedGroup& g,
                                            std::vector<ElemIdx> map, std::string label) {
  verify_element_map(g, map, label);
  return AutRealization{std::move(label), std::move(map), std::nullopt};
}

// --- families -------------------------------------------------------------

std::uint64_t alternating_order(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f / 2;
}

std::uint64_t psl_order(int dim, int q) {
  // q^{n(n-1)/2} * prod_{i=2}^{n} (q^i - 1) / gcd(n, q-1)
  std::uint64_t order = 1;
  for (int i = 0; i < dim * (dim - 1) / 2; ++i) order *= static_cast<std::uint64_t>(q);
  for (int i = 2; i <= dim; ++i) {
    std::uint64_t qi = 1;
    for (int j = 0; j < i; ++j) qi *= static_cast<std::uint64_t>(q);
    order *= qi - 1;
  }
  return order / std::gcd(static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(q - 1));
}

ConstructedGroup make_symmetric(int n, std::uint64_t order_cap) {
  if (n < 2) fail(ErrorKind::Usage, "S_n needs n >= 2");
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, "(0 1)"));
  if (n > 2) {
    std::vector<Point> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(img));
  }
  ConstructedGroup cg;
  cg.name = "S" + std::to_string(n);
  cg.group = enumerate_group(std::move(gens), order_cap);
  check_order(cg.group, alternating_order(n) * 2, cg.name);
  return cg;
}

ConstructedGroup make_alternating(int n, std::uint64_t order_cap) {
  if (n < 3 || n > 9) fail(ErrorKind::Usage, "A_n supported for 3 <= n <= 9");
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, "(0 1 2)"));
  if (n > 3) {
    std::vector<Point> img(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    } else {
      img[0] = 0;
      for (int i = 1; i < n; ++i) img[i] = static_cast<Point>(i % (n - 1) + 1);
    }
    gens.emplace_back(std::move(img));
  }
  ConstructedGroup cg;
  cg.name = "A" + std::to_string(n);
  cg.group = enumerate_group(std::move(gens), order_cap);
  check_order(cg.group, alternating_order(n), cg.name);
  cg.auts.push_back(
      realization_from_domain_perm(cg.group, Permutation::from_cycles(n, "(0 1)"), "odd"));

  if (n == 6) {
    // The exceptional outer classes are not conjugations by permutations of
    // the 6 points; pull them back through the degree-10 projective model.
    ConstructedGroup model = make_psl2(9, order_cap);
    std::vector<ElemIdx> phi = find_isomorphism(cg.group, model.group);
    std::vector<ElemIdx> phi_inv(phi.size());
    for (ElemIdx e = 0; e < phi.size(); ++e) phi_inv[phi[e]] = e;
    for (const auto& aut : model.auts) {
      std::vector<ElemIdx> pulled(cg.group.order());
      for (ElemIdx e = 0; e < cg.group.order(); ++e)
        pulled[e] = phi_inv[aut.element_map[phi[e]]];
      cg.auts.push_back(realization_from_element_map(cg.group, std::move(pulled),
                                                     "exceptional-" + aut.label));
    }
  }
  return cg;
}

namespace {

std::vector<Permutation> psl2_generator_perms(const ProjectiveSpace& space, int q) {
  const GfField& F = *space.field;
  std::vector<MatrixFq> mats;
  mats.push_back(elementary(2, F, 0, 1, 1));
  mats.push_back(elementary(2, F, 1, 0, 1));
  if (F.extension_degree() > 1) {
    mats.push_back(elementary(2, F, 0, 1, F.primitive_element()));
    mats.push_back(elementary(2, F, 1, 0, F.primitive_element()));
  }
  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(perm_of_matrix(space, m));
  (void)q;
  return gens;
}

}  // namespace

ConstructedGroup make_psl2(int q, std::uint64_t order_cap) {
  int p, e;
  if (!is_prime_power(q, &p, &e) || q < 4)
    fail(ErrorKind::NotPrimePower, "PSL2 needs a prime power q >= 4");
  ProjectiveSpace space = make_projective_space(2, q);
  ConstructedGroup cg;
  cg.name = "PSL2(" + std::to_string(q) + ")";
  cg.group = enumerate_group(psl2_generator_perms(space, q), order_cap);
  check_order(cg.group, psl_order(2, q), cg.name);

  const GfField& F = *space.field;
  if (q % 2 == 1) {
    MatrixFq d = MatrixFq::identity(2, F);
    d.at(0, 0) = F.primitive_element();
    cg.auts.push_back(realization_from_domain_perm(cg.group, perm_of_matrix(space, d), "diagonal"));
  }
  if (e > 1)
    cg.auts.push_back(realization_from_domain_perm(cg.group, frobenius_perm(space), "field"));
  return cg;
}

ConstructedGroup make_pgl2(int q, std::uint64_t order_cap) {
  int p, e;
  if (!is_prime_power(q, &p, &e) || q < 4)
    fail(ErrorKind::NotPrimePower, "PGL2 needs a prime power q >= 4");
  ProjectiveSpace space = make_projective_space(2, q);
  const GfField& F = *space.field;
  auto gens = psl2_generator_perms(space, q);
  MatrixFq d = MatrixFq::identity(2, F);
  d.at(0, 0) = F.primitive_element();
  gens.push_back(perm_of_matrix(space, d));
  ConstructedGroup cg;
  cg.name = "PGL2(" + std::to_string(q) + ")";
  cg.group = enumerate_group(std::move(gens), order_cap);
  check_order(cg.group, static_cast<std::uint64_t>(q) * (q - 1) * (q + 1), cg.name);
  if (e > 1)
    cg.auts.push_back(realization_from_domain_perm(cg.group, frobenius_perm(space), "field"));
  return cg;
}

ConstructedGroup make_psl3(int q, std::uint64_t order_cap) {
  if (q != 2 && q != 3 && q != 4) fail(ErrorKind::Usage, "PSL3 supported for q in {2, 3, 4}");
  ProjectiveSpace space = make_projective_space(3, q);
  const GfField& F = *space.field;

  std::vector<MatrixFq> mats;
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 0}}) {
    mats.push_back(elementary(3, F, i, j, 1));
    if (F.extension_degree() > 1) mats.push_back(elementary(3, F, i, j, F.primitive_element()));
  }
  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(perm_of_matrix(space, m));

  ConstructedGroup cg;
  cg.name = "PSL3(" + std::to_string(q) + ")";
  cg.group = enumerate_group(std::move(gens), order_cap);
  check_order(cg.group, psl_order(3, q), cg.name);

  if ((q - 1) % 3 == 0) {
    MatrixFq d = MatrixFq::identity(3, F);
    d.at(0, 0) = F.primitive_element();
    cg.auts.push_back(realization_from_domain_perm(cg.group, perm_of_matrix(space, d), "diagonal"));
  }
  if (F.extension_degree() > 1)
    cg.auts.push_back(realization_from_domain_perm(cg.group, frobenius_perm(space), "field"));

  // duality x -> (x^T)^{-1}: reconstruct each element's matrix from the
  // frame images, map it, and read the image element off its point action
  std::vector<Point> frame;
  {
    std::vector<Fq> v(3, 0);
    for (int i = 0; i < 3; ++i) {
      std::fill(v.begin(), v.end(), 0);
      v[i] = 1;
      frame.push_back(space.point_of(v));
    }
    std::fill(v.begin(), v.end(), 1);
    frame.push_back(space.point_of(v));
  }
  std::vector<ElemIdx> graph_map(cg.group.order());
  for (ElemIdx el = 0; el < cg.group.order(); ++el) {
    MatrixFq m = matrix_of_perm(space, cg.group.images_of(el), frame);
    MatrixFq image = m.inverse().transpose();
    Permutation pi = perm_of_matrix(space, image);
    auto found = cg.group.find(pi);
    if (!found) fail(ErrorKind::Internal, "duality image escaped PSL3");
    graph_map[el] = *found;
  }
  cg.auts.push_back(realization_from_element_map(cg.group, std::move(graph_map), "graph"));
  return cg;
}

ConstructedGroup make_from_file(const std::string& path, std::uint64_t order_cap) {
  ConstructedGroup cg;
  cg.name = "file:" + path;
  cg.group = enumerate_group(parse_generator_file(path), order_cap);
  return cg;
}

// --- isomorphism search ----------------------------------------------------

std::vector<ElemIdx> find_isomorphism(const EnumeratedGroup& from, const EnumeratedGroup& to) {
  if (from.order() != to.order()) fail(ErrorKind::NotFound, "orders differ");
  const std::size_t ngens = from.num_generators();

  // candidate images per generator: same element order and class size
  std::vector<std::vector<ElemIdx>> candidates(ngens);
  for (std::size_t j = 0; j < ngens; ++j) {
    ElemIdx gj = from.generator_index(j);
    std::uint32_t ord = from.element_order(gj);
    std::uint64_t csize = from.classes()[from.class_of(gj)].size();
    for (const auto& cls : to.classes()) {
      if (cls.size() != csize) continue;
      if (to.element_order(cls.representative) != ord) continue;
      candidates[j].insert(candidates[j].end(), cls.members.begin(), cls.members.end());
    }
  }

  std::vector<ElemIdx> images(ngens, 0);
  std::vector<ElemIdx> phi(from.order(), kNoElem);

  auto attempt = [&]() -> bool {
    std::fill(phi.begin(), phi.end(), kNoElem);
    phi[0] = 0;
    for (ElemIdx e = 1; e < from.order(); ++e)
      phi[e] = to.mul(phi[from.bfs_parent(e)], images[from.bfs_generator(e)]);
    for (ElemIdx e = 0; e < from.order(); ++e)
      for (std::size_t j = 0; j < ngens; ++j)
        if (phi[from.mul_by_generator(e, j)] != to.mul(phi[e], images[j])) return false;
    std::vector<bool> seen(to.order(), false);
    for (ElemIdx v : phi) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  };

  // depth-first over candidate tuples with a pairwise product-order filter
  std::vector<std::size_t> pick(ngens, 0);
  std::size_t level = 0;
  while (true) {
    if (pick[level] == candidates[level].size()) {
      if (level == 0) break;
      pick[level] = 0;
      ++pick[--level];
      continue;
    }
    images[level] = candidates[level][pick[level]];
    bool ok = true;
    for (std::size_t prev = 0; prev < level && ok; ++prev) {
      ElemIdx a = from.generator_index(prev), b = from.generator_index(level);
      if (to.element_order(to.mul(images[prev], images[level])) !=
          from.element_order(from.mul(a, b)))
        ok = false;
    }
    if (!ok) {
      ++pick[level];
      continue;
    }
    if (level + 1 < ngens) {
      ++level;
      continue;
    }
    if (attempt()) return phi;
    ++pick[level];
  }
  fail(ErrorKind::NotFound, "no isomorphism found");
}

// --- grammar ---------------------------------------------------------------

ConstructedGroup build_group(const std::string& spec, std::uint64_t order_cap) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::Parse, "bad group spec: " + spec);
    return std::stoi(s);
  };
  auto paren_arg = [&](std::size_t prefix_len) {
    if (spec.size() < prefix_len + 2 || spec[prefix_len] != '(' || spec.back() != ')')
      fail(ErrorKind::Parse, "bad group spec: " + spec);
    return parse_int(spec.substr(prefix_len + 1, spec.size() - prefix_len - 2));
  };
  if (spec.rfind("file:", 0) == 0) return make_from_file(spec.substr(5), order_cap);
  if (spec.rfind("PSL2", 0) == 0) return make_psl2(paren_arg(4), order_cap);
  if (spec.rfind("PGL2", 0) == 0) return make_pgl2(paren_arg(4), order_cap);
  if (spec.rfind("PSL3", 0) == 0) return make_psl3(paren_arg(4), order_cap);
  if (spec.size() >= 2 && spec[0] == 'A') return make_alternating(parse_int(spec.substr(1)), order_cap);
  if (spec.size() >= 2 && spec[0] == 'S') return make_symmetric(parse_int(spec.substr(1)), order_cap);
  fail(ErrorKind::Parse, "unrecognized group spec: " + spec);
}

std::vector<AutRealization> select_auts(const ConstructedGroup& cg, const std::string& selector) {
  if (selector == "inn") return {};
  if (selector == "aut") return cg.auts;
  if (selector.rfind("file:", 0) == 0) {
    std::vector<AutRealization> out;
    auto perms = parse_generator_file(selector.substr(5));
    for (std::size_t i = 0; i < perms.size(); ++i)
      out.push_back(realization_from_domain_perm(cg.group, perms[i],
                                                 "file#" + std::to_string(i)));
    return out;
  }
  fail(ErrorKind::Parse, "unrecognized aut selector: " + selector);
}

}  // namespace simdiag
