#include "simdiag/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "simdiag/errors.hpp"

namespace simdiag {

namespace {

using u64 = std::uint64_t;

u64 mod_pow(u64 base, u64 exp, u64 p) {
  u64 acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a % p, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (out.empty() || out.back() != d) out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

u64 dixon_prime(u64 exponent, u64 order) {
  double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 p = exponent + 1;; p += exponent)
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

u64 primitive_root(u64 p) {
  auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : factors)
      if (mod_pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(ErrorKind::Internal, "no primitive root");
}

// dense matrix over F_p, row major
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<u64> a;
  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  u64 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// columns of `basis` span an invariant subspace; returns R with M*B = B*R
ModMatrix restrict_to_subspace(const ModMatrix& m, const ModMatrix& basis, u64 p) {
  std::size_t k = basis.rows, d = basis.cols;
  ModMatrix aug(k, 2 * d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      aug.at(i, j) = basis.at(i, j);
      u64 acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc = (acc + m.at(i, l) * basis.at(l, j)) % p;
      aug.at(i, d + j) = acc;
    }
  // row reduce the left block to identity-on-pivots
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_row(d, 0);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = rank;
    while (piv < k && aug.at(piv, col) == 0) ++piv;
    if (piv == k) fail(ErrorKind::Internal, "basis not of full rank");
    if (piv != rank)
      for (std::size_t j = 0; j < 2 * d; ++j) std::swap(aug.at(piv, j), aug.at(rank, j));
    u64 inv = mod_inv(aug.at(rank, col), p);
    for (std::size_t j = 0; j < 2 * d; ++j) aug.at(rank, j) = aug.at(rank, j) * inv % p;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == rank) continue;
      u64 f = aug.at(r, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < 2 * d; ++j)
        aug.at(r, j) = (aug.at(r, j) + (p - f) * aug.at(rank, j)) % p;
    }
    pivot_row[col] = rank;
    ++rank;
  }
  ModMatrix r(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r.at(i, j) = aug.at(pivot_row[i], d + j);
  // consistency: rows beyond the pivots must have vanished
  for (std::size_t i = rank; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (aug.at(i, d + j) != 0) fail(ErrorKind::Internal, "subspace not invariant");
  return r;
}

// characteristic polynomial by Faddeev-LeVerrier (valid since p > dim)
std::vector<u64> char_poly(const ModMatrix& m, u64 p) {
  std::size_t d = m.rows;
  std::vector<u64> c(d + 1, 0);
  c[d] = 1;
  ModMatrix b(d, d);
  for (std::size_t i = 0; i < d; ++i) b.at(i, i) = 1;
  for (std::size_t step = 1; step <= d; ++step) {
    // a = m * b
    ModMatrix a(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l) {
        u64 v = m.at(i, l);
        if (!v) continue;
        for (std::size_t j = 0; j < d; ++j) a.at(i, j) = (a.at(i, j) + v * b.at(l, j)) % p;
      }
    u64 tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr = (tr + a.at(i, i)) % p;
    u64 coef = (p - tr % p) % p * mod_inv(step % p, p) % p;
    c[d - step] = coef;
    b = a;
    for (std::size_t i = 0; i < d; ++i) b.at(i, i) = (b.at(i, i) + coef) % p;
  }
  return c;
}

std::vector<std::vector<u64>> kernel_basis(ModMatrix m, u64 p) {
  std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    u64 inv = mod_inv(m.at(rank, col), p);
    for (std::size_t j = 0; j < cols; ++j) m.at(rank, j) = m.at(rank, j) * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      u64 f = m.at(r, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        m.at(r, j) = (m.at(r, j) + (p - f) * m.at(rank, j)) % p;
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = (p - m.at(r, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

double CharacterTable::row_orthogonality_residual() const {
  double worst = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i; j < values.size(); ++j) {
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < num_classes(); ++k)
        s += static_cast<double>(class_sizes[k]) * values[i][k] * std::conj(values[j][k]);
      s /= static_cast<double>(group_order);
      double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(s - std::complex<double>(target)));
    }
  return worst;
}

double CharacterTable::column_orthogonality_residual() const {
  double worst = 0;
  for (std::size_t a = 0; a < num_classes(); ++a)
    for (std::size_t b = a; b < num_classes(); ++b) {
      std::complex<double> s = 0;
      for (const auto& row : values) s += row[a] * std::conj(row[b]);
      s *= static_cast<double>(class_sizes[a]) / static_cast<double>(group_order);
      double target = (a == b) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(s - std::complex<double>(target)));
    }
  return worst;
}

CharacterTable dixon_table(const EnumeratedGroup& g, std::uint64_t table_cap) {
  if (g.order() > table_cap)
    fail(ErrorKind::CapExceeded, "group order exceeds character-table cap");
  const std::size_t nc = g.num_classes();
  const u64 order = g.order();
  const u64 e = g.exponent();
  const u64 p = dixon_prime(e, order);

  // structure-constant matrices: M_i[k][j] = #{(x,y) in C_i x C_j : xy = z_k}
  std::vector<ModMatrix> mats(nc);
  for (std::size_t i = 0; i < nc; ++i) mats[i] = ModMatrix(nc, nc);
  std::vector<ElemIdx> reps(nc);
  for (std::size_t k = 0; k < nc; ++k) reps[k] = g.classes()[k].representative;
  for (std::size_t i = 0; i < nc; ++i) {
    for (ElemIdx x : g.classes()[i].members) {
      ElemIdx xinv = g.inv(x);
      for (std::size_t k = 0; k < nc; ++k) {
        std::uint32_t j = g.class_of(g.mul(xinv, reps[k]));
        ++mats[i].at(k, j);
      }
    }
  }
  for (auto& m : mats)
    for (auto& v : m.a) v %= p;

  // common eigenvector computation by iterative eigenspace splitting
  std::vector<ModMatrix> subspaces;
  {
    ModMatrix full(nc, nc);
    for (std::size_t i = 0; i < nc; ++i) full.at(i, i) = 1;
    subspaces.push_back(std::move(full));
  }
  for (std::size_t mi = 1; mi < nc; ++mi) {
    bool all_split = true;
    for (const auto& s : subspaces)
      if (s.cols > 1) all_split = false;
    if (all_split) break;
    std::vector<ModMatrix> next;
    for (auto& basis : subspaces) {
      if (basis.cols == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      ModMatrix r = restrict_to_subspace(mats[mi], basis, p);
      auto poly = char_poly(r, p);
      std::size_t found = 0;
      for (u64 lam = 0; lam < p && found < r.rows; ++lam) {
        u64 val = 0;
        for (std::size_t c = poly.size(); c-- > 0;) val = (val * lam + poly[c]) % p;
        if (val != 0) continue;
        ModMatrix shifted = r;
        for (std::size_t i = 0; i < r.rows; ++i)
          shifted.at(i, i) = (shifted.at(i, i) + p - lam % p) % p;
        auto kern = kernel_basis(shifted, p);
        if (kern.empty()) continue;
        ModMatrix lifted(basis.rows, kern.size());
        for (std::size_t j = 0; j < kern.size(); ++j)
          for (std::size_t i = 0; i < basis.rows; ++i) {
            u64 acc = 0;
            for (std::size_t l = 0; l < basis.cols; ++l)
              acc = (acc + basis.at(i, l) * kern[j][l]) % p;
            lifted.at(i, j) = acc;
          }
        next.push_back(std::move(lifted));
        found += kern.size();
      }
      if (found != r.rows)
        fail(ErrorKind::LiftFailure, "eigenspace splitting lost dimensions");
    }
    subspaces = std::move(next);
  }
  if (subspaces.size() != nc) fail(ErrorKind::LiftFailure, "splitting did not separate characters");

  // normalized eigenvectors -> chi(c)/chi(1) mod p, then degrees
  std::vector<u64> class_size_mod(nc);
  for (std::size_t j = 0; j < nc; ++j) class_size_mod[j] = g.classes()[j].size() % p;

  std::vector<std::uint32_t> inv_class(nc);
  for (std::size_t j = 0; j < nc; ++j) inv_class[j] = g.inverse_class(static_cast<std::uint32_t>(j));

  // Each one-dimensional common eigenspace is spanned by the coefficient
  // vector of a central idempotent: v_j proportional to chi(c_j^{-1})/chi(1).
  struct LiftedRow {
    std::uint32_t degree;
    std::vector<u64> theta;  // chi(c_j) mod p
  };
  std::vector<LiftedRow> lifted;
  for (const auto& s : subspaces) {
    std::vector<u64> v(nc);
    for (std::size_t i = 0; i < nc; ++i) v[i] = s.at(i, 0);
    if (v[0] == 0) fail(ErrorKind::LiftFailure, "eigenvector vanishes on the identity class");
    u64 scale = mod_inv(v[0], p);
    for (auto& x : v) x = x * scale % p;
    // sum_j |C_j| chi(c_j) chi(c_j^{-1}) = |G| gives the degree
    u64 t = 0;
    for (std::size_t j = 0; j < nc; ++j)
      t = (t + class_size_mod[j] * v[j] % p * v[inv_class[j]]) % p;
    u64 deg_sq = order % p * mod_inv(t, p) % p;
    std::uint32_t degree = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (d * d % p == deg_sq) {
        degree = static_cast<std::uint32_t>(d);
        break;
      }
    if (degree == 0) fail(ErrorKind::LiftFailure, "no integral degree matches");
    LiftedRow row;
    row.degree = degree;
    row.theta.resize(nc);
    for (std::size_t j = 0; j < nc; ++j)
      row.theta[j] = static_cast<u64>(degree) % p * v[inv_class[j]] % p;
    lifted.push_back(std::move(row));
  }

  // lift to complex values through the e-th roots of unity
  const u64 z = mod_pow(primitive_root(p), (p - 1) / e, p);
  std::vector<u64> zpow(e);
  zpow[0] = 1;
  for (std::size_t i = 1; i < e; ++i) zpow[i] = zpow[i - 1] * z % p;
  std::vector<std::vector<std::uint32_t>> power_class(nc, std::vector<std::uint32_t>(e));
  for (std::size_t j = 0; j < nc; ++j) {
    ElemIdx acc = EnumeratedGroup::identity();
    for (u64 s = 0; s < e; ++s) {
      power_class[j][s] = g.class_of(acc);
      acc = g.mul(acc, reps[j]);
    }
  }
  const u64 e_inv = mod_inv(e % p, p);
  const double tau = 2.0 * std::numbers::pi / static_cast<double>(e);

  CharacterTable table;
  table.group_order = order;
  table.class_sizes.resize(nc);
  table.rep_orders.resize(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    table.class_sizes[j] = g.classes()[j].size();
    table.rep_orders[j] = g.element_order(reps[j]);
  }
  table.inverse_class = inv_class;

  std::vector<std::pair<std::uint32_t, std::vector<std::complex<double>>>> rows;
  for (const auto& row : lifted) {
    std::vector<std::complex<double>> vals(nc);
    for (std::size_t j = 0; j < nc; ++j) {
      std::complex<double> sum = 0;
      for (u64 l = 0; l < e; ++l) {
        u64 m = 0;
        for (u64 s = 0; s < e; ++s) {
          u64 idx = (e - l * s % e) % e;
          m = (m + row.theta[power_class[j][s]] * zpow[idx]) % p;
        }
        m = m * e_inv % p;
        if (m >= p / 2)
          fail(ErrorKind::LiftFailure, "eigenvalue multiplicity out of range");
        if (m)
          sum += static_cast<double>(m) *
                 std::complex<double>(std::cos(tau * static_cast<double>(l)),
                                      std::sin(tau * static_cast<double>(l)));
      }
      vals[j] = sum;
    }
    rows.emplace_back(row.degree, std::move(vals));
  }

  // trivial character first, the rest by (degree, rounded values)
  auto round_key = [&](const std::vector<std::complex<double>>& vals) {
    std::vector<std::pair<long long, long long>> key;
    for (const auto& v : vals)
      key.emplace_back(std::llround(v.real() * 1e6), std::llround(v.imag() * 1e6));
    return key;
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    bool ta = a.first == 1 && std::all_of(a.second.begin(), a.second.end(),
                                          [](auto v) { return std::abs(v - 1.0) < 1e-6; });
    bool tb = b.first == 1 && std::all_of(b.second.begin(), b.second.end(),
                                          [](auto v) { return std::abs(v - 1.0) < 1e-6; });
    if (ta != tb) return ta;
    if (a.first != b.first) return a.first < b.first;
    return round_key(a.second) < round_key(b.second);
  });

  std::uint64_t degree_sq_sum = 0;
  for (auto& [deg, vals] : rows) {
    table.degrees.push_back(deg);
    table.values.push_back(std::move(vals));
    degree_sq_sum += static_cast<std::uint64_t>(deg) * deg;
  }
  if (degree_sq_sum != order)
    fail(ErrorKind::LiftFailure, "degree squares do not sum to the group order");
  if (table.row_orthogonality_residual() > table.tolerance ||
      table.column_orthogonality_residual() > table.tolerance)
    fail(ErrorKind::LiftFailure, "orthogonality residual above tolerance");
  return table;
}

std::vector<std::int64_t> structure_count_vector(const EnumeratedGroup& g,
                                                 std::span<const std::uint32_t> class_ids,
                                                 std::uint64_t work_cap) {
  if (class_ids.empty()) fail(ErrorKind::Usage, "need at least one class");
  std::uint64_t work = 1;
  for (std::size_t i = 0; i + 1 < class_ids.size(); ++i) {
    work *= g.classes()[class_ids[i]].size();
    if (work > work_cap) fail(ErrorKind::CapExceeded, "brute-force work above cap");
  }
  std::vector<std::int64_t> counts(g.order(), 0);
  for (ElemIdx x : g.classes()[class_ids[0]].members) counts[x] = 1;
  for (std::size_t i = 1; i < class_ids.size(); ++i) {
    std::vector<std::int64_t> next(g.order(), 0);
    const auto& members = g.classes()[class_ids[i]].members;
    for (ElemIdx x = 0; x < g.order(); ++x) {
      if (!counts[x]) continue;
      std::int64_t c = counts[x];
      for (ElemIdx y : members) next[g.mul(x, y)] += c;
    }
    counts = std::move(next);
  }
  return counts;
}

std::int64_t structure_count_bruteforce(const EnumeratedGroup& g,
                                        std::span<const std::uint32_t> class_ids, ElemIdx z,
                                        std::uint64_t work_cap) {
  return structure_count_vector(g, class_ids, work_cap)[z];
}

SolutionCount frobenius_count(const EnumeratedGroup& g, const CharacterTable& table,
                              std::span<const std::uint32_t> class_ids, ElemIdx z) {
  const std::size_t nc = table.num_classes();
  std::uint32_t z_inv_class = g.class_of(g.inv(z));
  double prefactor = 1.0 / static_cast<double>(table.group_order);
  for (auto c : class_ids) prefactor *= static_cast<double>(table.class_sizes[c]);

  std::complex<double> sum = 0;
  for (std::size_t chi = 0; chi < nc; ++chi) {
    std::complex<double> term = table.values[chi][z_inv_class];
    for (auto c : class_ids) term *= table.values[chi][c];
    double denom = std::pow(static_cast<double>(table.degrees[chi]),
                            static_cast<double>(class_ids.size()) - 1.0);
    sum += term / denom;
  }
  SolutionCount out;
  std::complex<double> value = prefactor * sum;
  out.value = value.real();
  out.rounded = std::llround(out.value);
  out.residual = std::abs(value - std::complex<double>(static_cast<double>(out.rounded)));
  if (out.residual >= 0.5)
    fail(ErrorKind::ResidualTooLarge, "solution count residual reached 0.5");
  return out;
}

MembershipBound corollary_membership(const EnumeratedGroup& g, const CharacterTable& table,
                                     std::uint32_t c_idx, std::uint32_t d_idx, std::uint32_t k,
                                     bool verify) {
  if (c_idx == 0 || d_idx == 0) fail(ErrorKind::Usage, "classes must be nontrivial");
  if (k == 0) fail(ErrorKind::Usage, "k must be positive");
  std::uint32_t d_inv = table.inverse_class[d_idx];
  std::complex<double> sum = 0;
  for (std::size_t chi = 1; chi < table.num_classes(); ++chi) {
    std::complex<double> term = std::pow(table.values[chi][c_idx], static_cast<int>(k));
    term *= table.values[chi][d_inv];
    term /= std::pow(static_cast<double>(table.degrees[chi]), static_cast<double>(k) - 1.0);
    sum += term;
  }
  MembershipBound out;
  out.sum_bound = std::abs(sum);
  out.implied = out.sum_bound < 1.0 - 1e-6;
  if (out.implied && verify) {
    ElementSet c_set = ElementSet::of_class(g, c_idx);
    std::vector<std::uint32_t> power{c_idx};
    for (std::uint32_t i = 1; i < k; ++i) power = class_set_product(g, power, c_set);
    if (!std::binary_search(power.begin(), power.end(), d_idx))
      fail(ErrorKind::Internal, "membership bound contradicts exact set product");
  }
  return out;
}

}  // namespace simdiag
