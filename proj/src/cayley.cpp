#include "simdiag/cayley.hpp"

#include <algorithm>

#include "simdiag/errors.hpp"

namespace simdiag {

namespace {

// Frontier-times-connection-set BFS over the elements.
EccentricityResult bfs_elementwise(const EnumeratedGroup& g, const ElementSet& s,
                                   bool want_parents) {
  EccentricityResult r;
  r.dist.assign(g.order(), -1);
  if (want_parents) {
    r.parent.assign(g.order(), kNoElem);
    r.via.assign(g.order(), kNoElem);
  }
  auto sv = s.to_vector();
  std::vector<ElemIdx> frontier{EnumeratedGroup::identity()};
  r.dist[EnumeratedGroup::identity()] = 0;
  std::int32_t depth = 0;
  std::uint64_t reached = 1;
  while (!frontier.empty()) {
    ++depth;
    std::vector<ElemIdx> next;
    for (ElemIdx x : frontier) {
      for (ElemIdx y : sv) {
        ElemIdx z = g.mul(x, y);
        if (r.dist[z] == -1) {
          r.dist[z] = depth;
          if (want_parents) {
            r.parent[z] = x;
            r.via[z] = y;
          }
          next.push_back(z);
          ++reached;
        }
      }
    }
    if (!next.empty()) r.width = static_cast<std::uint32_t>(depth);
    frontier = std::move(next);
  }
  r.generated = (reached == g.order());
  return r;
}

// When S is a union of classes, dist is constant on classes and the BFS can
// run over the class graph: E is a neighbour of D exactly when some d*s with
// d a representative of D lands in E.
EccentricityResult bfs_classwise(const EnumeratedGroup& g, const ElementSet& s) {
  const std::uint32_t nc = g.num_classes();
  auto sv = s.to_vector();
  std::vector<std::int32_t> cdist(nc, -1);
  std::vector<std::uint32_t> frontier{g.class_of(EnumeratedGroup::identity())};
  cdist[frontier[0]] = 0;
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<std::uint32_t> next;
    for (std::uint32_t c : frontier) {
      ElemIdx d = g.classes()[c].representative;
      for (ElemIdx y : sv) {
        std::uint32_t e = g.class_of(g.mul(d, y));
        if (cdist[e] == -1) {
          cdist[e] = depth;
          next.push_back(e);
        }
      }
    }
    frontier = std::move(next);
  }
  EccentricityResult r;
  r.dist.assign(g.order(), -1);
  std::uint32_t width = 0;
  bool all = true;
  for (std::uint32_t c = 0; c < nc; ++c) {
    if (cdist[c] == -1) {
      all = false;
      continue;
    }
    width = std::max(width, static_cast<std::uint32_t>(cdist[c]));
    for (ElemIdx m : g.classes()[c].members) r.dist[m] = cdist[c];
  }
  r.width = width;
  r.generated = all;
  return r;
}

}  // namespace

EccentricityResult cayley_distances(const EnumeratedGroup& g, const ElementSet& s,
                                    bool want_parents) {
  if (s.empty()) fail(ErrorKind::Usage, "empty connection set");
  if (!want_parents && is_conjugation_invariant(g, s)) return bfs_classwise(g, s);
  return bfs_elementwise(g, s, want_parents);
}

EccentricityResult cayley_eccentricity(const EnumeratedGroup& g, const ElementSet& s) {
  EccentricityResult r = cayley_distances(g, s);
  if (!r.generated)
    fail(ErrorKind::NotGenerating, "connection set does not generate the group");
  return r;
}

}  // namespace simdiag
