#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simdiag/constructions.hpp"
#include "simdiag/enumerated_group.hpp"

namespace simdiag {

using DPoint = std::uint64_t;
inline constexpr std::uint64_t kDefaultPointCap = std::uint64_t{1} << 21;

enum class Variant { Tk, TkSk, DkT, Custom };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

// Coset space of the diagonal subgroup in T^k. A coset D(h_1,...,h_k) is
// stored in the canonical form (h_1^{-1}h_2, ..., h_1^{-1}h_k) and encoded
// as a mixed-radix integer over element indices; the base point (all
// identities) is 0. The point stabilizer D_A is generated by the diagonal
// copies of the T-generators, the coordinate permutations of the variant,
// and the configured automorphism realizations applied entrywise.
class DiagonalGeometry {
 public:
  DiagonalGeometry(const EnumeratedGroup& t, int k, Variant variant, std::uint64_t point_cap,
                   std::span<const AutRealization> auts = {},
                   std::span<const Permutation> custom_coord_gens = {});

  const EnumeratedGroup& T() const { return *t_; }
  int k() const { return k_; }
  Variant variant() const { return variant_; }
  DPoint omega_size() const { return omega_; }
  static constexpr DPoint base_point() { return 0; }
  std::size_t num_stabilizer_generators() const;
  const std::vector<Permutation>& coordinate_generators() const { return coord_gens_; }

  DPoint encode(std::span<const ElemIdx> tuple) const;  // k-1 entries
  std::vector<ElemIdx> decode(DPoint p) const;

  // point * (t_1, ..., t_k), renormalized
  DPoint act_tuple(DPoint p, std::span<const ElemIdx> full_tuple) const;
  // permute the implicit k coordinates and renormalize
  DPoint act_coord_perm(DPoint p, const Permutation& sigma) const;
  // apply an automorphism realization entrywise
  DPoint act_aut(DPoint p, const AutRealization& alpha) const;

  // image of the point under the i-th stabilizer generator
  DPoint act_stabilizer_gen(DPoint p, std::size_t i) const;

  // canonical(base * t_s^{-1}) for the tuple translating base to s
  DPoint reversal(DPoint s) const;

 private:
  const EnumeratedGroup* t_;
  int k_;
  Variant variant_;
  DPoint omega_;
  std::vector<Permutation> coord_gens_;
  std::vector<AutRealization> auts_;
};

struct Suborbits {
  std::vector<std::uint32_t> orbit_of;  // point -> orbit id (ids by least point)
  std::vector<DPoint> reps;             // least point per orbit
  std::vector<std::uint64_t> sizes;
  std::uint32_t rank() const { return static_cast<std::uint32_t>(reps.size()); }
};

Suborbits suborbits(const DiagonalGeometry& geom);

// Undirected orbital graph through beta: N(base) is the D_A-orbit of beta
// united with its reversal set; all other adjacency is by translation.
struct OrbitalGraph {
  const DiagonalGeometry* geom = nullptr;
  DPoint beta = 0;
  std::uint64_t suborbit_size = 0;  // size of the defining directed suborbit
  bool self_paired = false;
  std::vector<DPoint> base_neighbors;                 // sorted
  std::vector<std::vector<ElemIdx>> neighbor_tuples;  // decoded, same order

  std::uint64_t valency() const { return base_neighbors.size(); }
  DPoint neighbor(DPoint alpha, std::span<const ElemIdx> alpha_tuple, std::size_t i) const;
  bool adjacent(DPoint a, DPoint b) const;
};

OrbitalGraph orbital_graph(const DiagonalGeometry& geom, DPoint beta);

// Eccentricity of the base point; throws Disconnected if the graph does not
// reach every point.
std::uint32_t graph_diameter(const OrbitalGraph& graph);
// Eccentricity from an arbitrary start (vertex-transitivity checks).
std::uint32_t graph_eccentricity_from(const OrbitalGraph& graph, DPoint start);
// Whether d(a, b) exceeds r, via half-radius balls around both endpoints.
bool distance_exceeds(const OrbitalGraph& graph, DPoint a, DPoint b, std::uint32_t r);

struct OrbitalSummary {
  DPoint rep = 0;
  std::uint64_t suborbit_size = 0;
  std::uint64_t valency = 0;
  std::uint32_t diameter = 0;
};

struct OrbdiamReport {
  DPoint omega = 0;
  std::uint32_t rank = 0;
  std::vector<OrbitalSummary> orbitals;  // one per undirected orbital graph
  std::uint32_t orbdiam = 0;
  bool incomplete = false;
};

struct OrbdiamOptions {
  unsigned threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

OrbdiamReport orbdiam(const DiagonalGeometry& geom, unsigned threads = 1);
OrbdiamReport orbdiam(const DiagonalGeometry& geom, const OrbdiamOptions& opt);

struct BoundCertificate {
  ElemIdx t = 0;
  std::uint32_t diameter = 0;
  std::uint32_t lower_m = 0;
  std::uint32_t upper_1 = 0;
  std::uint32_t upper_2 = 0;  // 0 when not applicable
  std::uint32_t c_x_t = 0;    // width of t's fused class under the variant's X_0
  std::uint32_t c_i_group = 0;
};

// Measures Gamma_0^t and checks the sandwich; throws BoundViolation if the
// measured diameter escapes the bounds.
BoundCertificate bound_certificate(const DiagonalGeometry& geom, ElemIdx t, std::uint32_t c_x_t,
                                   std::uint32_t c_i_group);

// Explicit path base -> target inside Gamma_0^t, filling one coordinate at a
// time with factors of the inverse-closed class of t. Returns the vertex
// sequence after the base point (empty when target is the base).
std::vector<DPoint> construct_path(const DiagonalGeometry& geom, ElemIdx t, DPoint target);

std::string dot_export(const OrbitalGraph& graph);  // |Omega| <= 5000

}  // namespace simdiag
