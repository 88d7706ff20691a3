#pragma once

#include <cstdint>
#include <vector>

#include "simdiag/element_set.hpp"
#include "simdiag/enumerated_group.hpp"

namespace simdiag {

// BFS result for the Cayley graph on connection set S. dist[g] is the least
// m with g in S^m (dist[identity] = 0, -1 if unreachable).
struct EccentricityResult {
  std::uint32_t width = 0;
  std::vector<std::int32_t> dist;
  bool generated = true;
  // Set when parents were requested: g = parent[g] * via[g] with via[g] in S.
  std::vector<ElemIdx> parent;
  std::vector<ElemIdx> via;
};

// Never throws on a non-generating S; inspect .generated.
EccentricityResult cayley_distances(const EnumeratedGroup& g, const ElementSet& s,
                                    bool want_parents = false);

// Width of the group with respect to S: the eccentricity of the identity in
// the Cayley graph. Throws NotGenerating when some element is unreachable.
EccentricityResult cayley_eccentricity(const EnumeratedGroup& g, const ElementSet& s);

}  // namespace simdiag
