#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simdiag/gf.hpp"

namespace simdiag {

// Square matrix over GF(q), row major. Vectors are rows and act on the right
// (v -> v*M), so the matrix-to-permutation map on projective points is a
// homomorphism for our left-to-right products.
struct MatrixFq {
  int n = 0;
  const GfField* field = nullptr;
  std::vector<Fq> a;

  MatrixFq() = default;
  MatrixFq(int n_, const GfField& f) : n(n_), field(&f), a(static_cast<std::size_t>(n_) * n_, 0) {}

  Fq& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  Fq at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static MatrixFq identity(int n, const GfField& f);
  MatrixFq operator*(const MatrixFq& rhs) const;
  MatrixFq transpose() const;
  MatrixFq inverse() const;  // throws DivisionByZero if singular
  MatrixFq scaled(Fq lambda) const;
  MatrixFq pow(std::uint64_t e) const;
  Fq det() const;
  bool operator==(const MatrixFq& rhs) const { return n == rhs.n && a == rhs.a; }
  std::string to_string() const;
};

int matrix_rank(MatrixFq m);
inline int kernel_dimension(const MatrixFq& m) { return m.n - matrix_rank(m); }

// nu(x): n minus the largest dimension of an eigenspace of any F_q-scalar
// multiple of x; equals 0 iff some scalar multiple of x is unipotent-free...
// concretely: n - max over lambda in F_q^* of dim ker(lambda*x - 1).
int nu(const MatrixFq& x);

// Companion matrix of the least primitive polynomial of degree n over F_q,
// raised to the (q-1)-th power when needed so the result lies in SL_n(q).
// The returned matrix generates an irreducible cyclic subgroup, so nu = n.
MatrixFq singer_matrix(int n, int q);

// Unit upper elementary matrix I + E_{01}; fixes a hyperplane, nu = 1.
MatrixFq transvection_matrix(int n, int q);

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Width lower bound nu(T)/nu(S) as an exact rational.
Rational nu_ratio_bound(long long nu_t, long long nu_s);

}  // namespace simdiag
