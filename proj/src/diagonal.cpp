#include "simdiag/diagonal.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "simdiag/errors.hpp"
#include "simdiag/parallel.hpp"
#include "simdiag/widths.hpp"

namespace simdiag {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Tk: return "Tk";
    case Variant::TkSk: return "TkSk";
    case Variant::DkT: return "DkT";
    case Variant::Custom: return "custom";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "Tk") return Variant::Tk;
  if (s == "TkSk") return Variant::TkSk;
  if (s == "DkT") return Variant::DkT;
  if (s == "custom") return Variant::Custom;
  fail(ErrorKind::Parse, "unknown variant: " + s);
}

DiagonalGeometry::DiagonalGeometry(const EnumeratedGroup& t, int k, Variant variant,
                                   std::uint64_t point_cap,
                                   std::span<const AutRealization> auts,
                                   std::span<const Permutation> custom_coord_gens)
    : t_(&t), k_(k), variant_(variant) {
  if (k < 2) fail(ErrorKind::Usage, "k must be at least 2");
  omega_ = 1;
  for (int i = 0; i + 1 < k; ++i) {
    if (omega_ > point_cap / t.order())
      fail(ErrorKind::CapExceeded, "|T|^{k-1} exceeds the point cap");
    omega_ *= t.order();
  }

  switch (variant) {
    case Variant::Tk:
      break;
    case Variant::TkSk:
    case Variant::DkT: {
      coord_gens_.push_back(Permutation::from_cycles(k, "(0 1)"));
      if (k > 2) {
        std::vector<Point> img(k);
        for (int i = 0; i < k; ++i) img[i] = static_cast<Point>((i + 1) % k);
        coord_gens_.emplace_back(std::move(img));
      }
      break;
    }
    case Variant::Custom:
      coord_gens_.assign(custom_coord_gens.begin(), custom_coord_gens.end());
      for (const auto& s : coord_gens_)
        if (static_cast<int>(s.degree()) != k)
          fail(ErrorKind::Usage, "coordinate generator degree != k");
      if (k >= 3) {
        std::vector<bool> orbit(k, false);
        std::vector<int> work{0};
        orbit[0] = true;
        while (!work.empty()) {
          int x = work.back();
          work.pop_back();
          for (const auto& s : coord_gens_)
            if (!orbit[s[static_cast<Point>(x)]]) {
              orbit[s[static_cast<Point>(x)]] = true;
              work.push_back(s[static_cast<Point>(x)]);
            }
        }
        if (!std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; }))
          fail(ErrorKind::NonTransitiveCoordinates,
               "custom coordinate group is not transitive");
      }
      break;
  }
  if (variant == Variant::DkT || variant == Variant::Custom)
    auts_.assign(auts.begin(), auts.end());
}

std::size_t DiagonalGeometry::num_stabilizer_generators() const {
  return t_->num_generators() + coord_gens_.size() + auts_.size();
}

DPoint DiagonalGeometry::encode(std::span<const ElemIdx> tuple) const {
  DPoint p = 0;
  for (int i = k_ - 2; i >= 0; --i) p = p * t_->order() + tuple[i];
  return p;
}

std::vector<ElemIdx> DiagonalGeometry::decode(DPoint p) const {
  std::vector<ElemIdx> tuple(k_ - 1);
  for (int i = 0; i + 1 < k_; ++i) {
    tuple[i] = static_cast<ElemIdx>(p % t_->order());
    p /= t_->order();
  }
  return tuple;
}

DPoint DiagonalGeometry::act_tuple(DPoint p, std::span<const ElemIdx> full_tuple) const {
  auto x = decode(p);
  ElemIdx lead_inv = t_->inv(full_tuple[0]);
  std::vector<ElemIdx> y(k_ - 1);
  for (int j = 0; j + 1 < k_; ++j)
    y[j] = t_->mul(t_->mul(lead_inv, x[j]), full_tuple[j + 1]);
  return encode(y);
}

DPoint DiagonalGeometry::act_coord_perm(DPoint p, const Permutation& sigma) const {
  auto x = decode(p);
  std::vector<ElemIdx> full(k_);
  full[sigma[0]] = EnumeratedGroup::identity();
  for (int i = 1; i < k_; ++i) full[sigma[static_cast<Point>(i)]] = x[i - 1];
  ElemIdx lead_inv = t_->inv(full[0]);
  std::vector<ElemIdx> y(k_ - 1);
  for (int j = 1; j < k_; ++j) y[j - 1] = t_->mul(lead_inv, full[j]);
  return encode(y);
}

DPoint DiagonalGeometry::act_aut(DPoint p, const AutRealization& alpha) const {
  auto x = decode(p);
  for (auto& e : x) e = alpha.apply(e);
  return encode(x);
}

DPoint DiagonalGeometry::act_stabilizer_gen(DPoint p, std::size_t i) const {
  if (i < t_->num_generators()) {
    // diagonal (g, ..., g): coordinatewise conjugation
    auto x = decode(p);
    for (auto& e : x) e = t_->conj_by_generator(e, i);
    return encode(x);
  }
  i -= t_->num_generators();
  if (i < coord_gens_.size()) return act_coord_perm(p, coord_gens_[i]);
  return act_aut(p, auts_[i - coord_gens_.size()]);
}

DPoint DiagonalGeometry::reversal(DPoint s) const {
  auto x = decode(s);
  for (auto& e : x) e = t_->inv(e);
  return encode(x);
}

Suborbits suborbits(const DiagonalGeometry& geom) {
  Suborbits out;
  out.orbit_of.assign(geom.omega_size(), static_cast<std::uint32_t>(-1));
  std::vector<DPoint> work;
  for (DPoint start = 0; start < geom.omega_size(); ++start) {
    if (out.orbit_of[start] != static_cast<std::uint32_t>(-1)) continue;
    std::uint32_t id = static_cast<std::uint32_t>(out.reps.size());
    out.reps.push_back(start);
    out.orbit_of[start] = id;
    std::uint64_t size = 1;
    work.assign(1, start);
    while (!work.empty()) {
      DPoint p = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < geom.num_stabilizer_generators(); ++i) {
        DPoint q = geom.act_stabilizer_gen(p, i);
        if (out.orbit_of[q] == static_cast<std::uint32_t>(-1)) {
          out.orbit_of[q] = id;
          work.push_back(q);
          ++size;
        }
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

OrbitalGraph orbital_graph(const DiagonalGeometry& geom, DPoint beta) {
  if (beta == DiagonalGeometry::base_point())
    fail(ErrorKind::DiagonalPair, "beta must differ from the base point");
  OrbitalGraph g;
  g.geom = &geom;
  g.beta = beta;

  // directed suborbit of beta
  std::vector<DPoint> orbit{beta};
  std::vector<bool> seen_small;
  std::unordered_map<DPoint, bool> seen_big;
  bool use_small = geom.omega_size() <= (std::uint64_t{1} << 26);
  if (use_small)
    seen_small.assign(geom.omega_size(), false), seen_small[beta] = true;
  else
    seen_big[beta] = true;
  auto mark = [&](DPoint p) -> bool {
    if (use_small) {
      if (seen_small[p]) return false;
      seen_small[p] = true;
      return true;
    }
    return seen_big.emplace(p, true).second;
  };
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    DPoint p = orbit[head];
    for (std::size_t i = 0; i < geom.num_stabilizer_generators(); ++i) {
      DPoint q = geom.act_stabilizer_gen(p, i);
      if (mark(q)) orbit.push_back(q);
    }
  }
  g.suborbit_size = orbit.size();

  std::vector<DPoint> undirected = orbit;
  for (DPoint p : orbit) undirected.push_back(geom.reversal(p));
  std::sort(undirected.begin(), undirected.end());
  undirected.erase(std::unique(undirected.begin(), undirected.end()), undirected.end());
  g.self_paired = undirected.size() == orbit.size();
  g.base_neighbors = std::move(undirected);
  g.neighbor_tuples.reserve(g.base_neighbors.size());
  for (DPoint p : g.base_neighbors) g.neighbor_tuples.push_back(geom.decode(p));
  return g;
}

DPoint OrbitalGraph::neighbor(DPoint, std::span<const ElemIdx> alpha_tuple,
                              std::size_t i) const {
  const auto& s = neighbor_tuples[i];
  const auto& T = geom->T();
  std::vector<ElemIdx> y(alpha_tuple.size());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = T.mul(s[j], alpha_tuple[j]);
  return geom->encode(y);
}

bool OrbitalGraph::adjacent(DPoint a, DPoint b) const {
  // (a, b) is an edge iff b * t_a^{-1} lies in N(base)
  auto at = geom->decode(a);
  const auto& T = geom->T();
  std::vector<ElemIdx> inv_tuple(at.size() + 1);
  inv_tuple[0] = EnumeratedGroup::identity();
  for (std::size_t j = 0; j < at.size(); ++j) inv_tuple[j + 1] = T.inv(at[j]);
  DPoint q = geom->act_tuple(b, inv_tuple);
  return std::binary_search(base_neighbors.begin(), base_neighbors.end(), q);
}

namespace {

// layered BFS; returns (eccentricity, number of points reached)
std::pair<std::uint32_t, std::uint64_t> bfs(const OrbitalGraph& g, DPoint start) {
  const DPoint omega = g.geom->omega_size();
  std::vector<std::uint64_t> visited((omega + 63) / 64, 0);
  auto test_and_set = [&](DPoint p) {
    std::uint64_t mask = std::uint64_t{1} << (p & 63);
    if (visited[p >> 6] & mask) return false;
    visited[p >> 6] |= mask;
    return true;
  };
  test_and_set(start);
  std::vector<DPoint> frontier{start};
  std::uint64_t reached = 1;
  std::uint32_t depth = 0;
  while (!frontier.empty()) {
    std::vector<DPoint> next;
    for (DPoint p : frontier) {
      auto tuple = g.geom->decode(p);
      for (std::size_t i = 0; i < g.base_neighbors.size(); ++i) {
        DPoint q = g.neighbor(p, tuple, i);
        if (test_and_set(q)) {
          next.push_back(q);
          ++reached;
        }
      }
    }
    if (!next.empty()) ++depth;
    frontier = std::move(next);
  }
  return {depth, reached};
}

}  // namespace

std::uint32_t graph_diameter(const OrbitalGraph& graph) {
  auto [ecc, reached] = bfs(graph, DiagonalGeometry::base_point());
  if (reached != graph.geom->omega_size())
    fail(ErrorKind::Disconnected, "orbital graph is disconnected (non-primitive action)");
  return ecc;
}

std::uint32_t graph_eccentricity_from(const OrbitalGraph& graph, DPoint start) {
  auto [ecc, reached] = bfs(graph, start);
  if (reached != graph.geom->omega_size())
    fail(ErrorKind::Disconnected, "orbital graph is disconnected (non-primitive action)");
  return ecc;
}

bool distance_exceeds(const OrbitalGraph& graph, DPoint a, DPoint b, std::uint32_t r) {
  auto ball = [&](DPoint start, std::uint32_t radius) {
    const DPoint omega = graph.geom->omega_size();
    std::vector<std::uint64_t> visited((omega + 63) / 64, 0);
    auto test_and_set = [&](DPoint p) {
      std::uint64_t mask = std::uint64_t{1} << (p & 63);
      if (visited[p >> 6] & mask) return false;
      visited[p >> 6] |= mask;
      return true;
    };
    test_and_set(start);
    std::vector<DPoint> frontier{start};
    for (std::uint32_t d = 0; d < radius && !frontier.empty(); ++d) {
      std::vector<DPoint> next;
      for (DPoint p : frontier) {
        auto tuple = graph.geom->decode(p);
        for (std::size_t i = 0; i < graph.base_neighbors.size(); ++i) {
          DPoint q = graph.neighbor(p, tuple, i);
          if (test_and_set(q)) next.push_back(q);
        }
      }
      frontier = std::move(next);
    }
    return visited;
  };
  auto ba = ball(a, (r + 1) / 2);
  auto bb = ball(b, r / 2);
  for (std::size_t i = 0; i < ba.size(); ++i)
    if (ba[i] & bb[i]) return false;
  return true;
}

OrbdiamReport orbdiam(const DiagonalGeometry& geom, const OrbdiamOptions& opt) {
  Suborbits parts = suborbits(geom);
  OrbdiamReport report;
  report.omega = geom.omega_size();
  report.rank = parts.rank();

  // Pair each suborbit with its reversal partner and measure each undirected
  // graph once.
  std::vector<DPoint> graph_reps;
  std::vector<bool> used(parts.rank(), false);
  for (std::uint32_t id = 0; id < parts.rank(); ++id) {
    if (used[id] || parts.reps[id] == DiagonalGeometry::base_point()) continue;
    used[id] = true;
    used[parts.orbit_of[geom.reversal(parts.reps[id])]] = true;
    graph_reps.push_back(parts.reps[id]);
  }

  std::vector<OrbitalSummary> rows(graph_reps.size());
  std::vector<bool> computed(graph_reps.size(), false);
  parallel_for(graph_reps.size(), opt.threads, [&](std::size_t i) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) return;
    OrbitalGraph g = orbital_graph(geom, graph_reps[i]);
    rows[i] = OrbitalSummary{graph_reps[i], g.suborbit_size, g.valency(), graph_diameter(g)};
    computed[i] = true;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!computed[i]) {
      report.incomplete = true;
      continue;
    }
    report.orbitals.push_back(rows[i]);
    report.orbdiam = std::max(report.orbdiam, rows[i].diameter);
  }
  return report;
}

OrbdiamReport orbdiam(const DiagonalGeometry& geom, unsigned threads) {
  OrbdiamOptions opt;
  opt.threads = threads;
  return orbdiam(geom, opt);
}

BoundCertificate bound_certificate(const DiagonalGeometry& geom, ElemIdx t, std::uint32_t c_x_t,
                                   std::uint32_t c_i_group) {
  const int k = geom.k();
  std::vector<ElemIdx> tuple(static_cast<std::size_t>(k) - 1, EnumeratedGroup::identity());
  tuple.back() = t;
  OrbitalGraph g = orbital_graph(geom, geom.encode(tuple));

  BoundCertificate cert;
  cert.t = t;
  cert.c_x_t = c_x_t;
  cert.c_i_group = c_i_group;
  cert.diameter = graph_diameter(g);
  cert.lower_m = (k % 2 == 1) ? (static_cast<std::uint32_t>(k - 1) * c_x_t) / 2 + 1
                              : (static_cast<std::uint32_t>(k) * c_x_t) / 2;
  cert.upper_1 = static_cast<std::uint32_t>(k - 1) * c_i_group;
  cert.upper_2 = (geom.variant() == Variant::TkSk)
                     ? 24u * static_cast<std::uint32_t>(k - 1) * c_i_group * c_i_group
                     : 0u;
  if (cert.diameter < cert.lower_m || cert.diameter > cert.upper_1 ||
      (cert.upper_2 && cert.diameter > cert.upper_2))
    fail(ErrorKind::BoundViolation,
         "measured diameter " + std::to_string(cert.diameter) + " escapes [" +
             std::to_string(cert.lower_m) + ", " + std::to_string(cert.upper_1) + "]");
  return cert;
}

std::vector<DPoint> construct_path(const DiagonalGeometry& geom, ElemIdx t, DPoint target) {
  const EnumeratedGroup& T = geom.T();
  const int k = geom.k();
  if (k >= 3 && geom.coordinate_generators().empty())
    fail(ErrorKind::FactorizationUnavailable,
         "no coordinate transitivity: the graph has no edges off the last coordinate");

  std::vector<ElemIdx> base_tuple(static_cast<std::size_t>(k) - 1, EnumeratedGroup::identity());
  base_tuple.back() = t;
  OrbitalGraph g = orbital_graph(geom, geom.encode(base_tuple));

  FusedClass fused = fuse_class(T, t, FusionSpec::PmTClass);
  auto targets = geom.decode(target);

  std::vector<DPoint> path;
  std::vector<ElemIdx> current(static_cast<std::size_t>(k) - 1, EnumeratedGroup::identity());
  DPoint here = DiagonalGeometry::base_point();
  for (int coord = 0; coord + 1 < k; ++coord) {
    ElemIdx h = targets[coord];
    if (h == EnumeratedGroup::identity()) continue;
    std::vector<ElemIdx> factors = conjugate_factorization(T, fused, h);
    // apply factors as left multiplications, suffix-first
    for (std::size_t i = factors.size(); i-- > 0;) {
      current[coord] = T.mul(factors[i], current[coord]);
      DPoint next = geom.encode(current);
      if (!g.adjacent(here, next))
        fail(ErrorKind::Internal, "constructed step is not an edge");
      path.push_back(next);
      here = next;
    }
  }
  if (here != target) fail(ErrorKind::Internal, "path did not reach the target");
  return path;
}

std::string dot_export(const OrbitalGraph& graph) {
  if (graph.geom->omega_size() > 5000)
    fail(ErrorKind::Usage, "dot export limited to 5000 points");
  std::ostringstream os;
  os << "graph orbital {\n";
  for (DPoint p = 0; p < graph.geom->omega_size(); ++p) {
    auto tuple = graph.geom->decode(p);
    for (std::size_t i = 0; i < graph.base_neighbors.size(); ++i) {
      DPoint q = graph.neighbor(p, tuple, i);
      if (p < q) os << "  " << p << " -- " << q << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace simdiag
