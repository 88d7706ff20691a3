#include "simdiag/matrix.hpp"

#include <numeric>
#include <sstream>

#include "simdiag/errors.hpp"

namespace simdiag {

MatrixFq MatrixFq::identity(int n, const GfField& f) {
  MatrixFq m(n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixFq MatrixFq::operator*(const MatrixFq& rhs) const {
  const GfField& F = *field;
  MatrixFq out(n, F);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Fq v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(v, rhs.at(k, j)));
    }
  return out;
}

MatrixFq MatrixFq::transpose() const {
  MatrixFq out(n, *field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(j, i) = at(i, j);
  return out;
}

MatrixFq MatrixFq::scaled(Fq lambda) const {
  MatrixFq out(n, *field);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = field->mul(a[i], lambda);
  return out;
}

MatrixFq MatrixFq::pow(std::uint64_t e) const {
  MatrixFq acc = identity(n, *field);
  MatrixFq base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MatrixFq MatrixFq::inverse() const {
  const GfField& F = *field;
  MatrixFq left = *this;
  MatrixFq right = identity(n, F);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (left.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail(ErrorKind::DivisionByZero, "singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(left.at(pivot, j), left.at(col, j));
        std::swap(right.at(pivot, j), right.at(col, j));
      }
    Fq inv = F.inv(left.at(col, col));
    for (int j = 0; j < n; ++j) {
      left.at(col, j) = F.mul(left.at(col, j), inv);
      right.at(col, j) = F.mul(right.at(col, j), inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Fq factor = left.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        left.at(r, j) = F.sub(left.at(r, j), F.mul(factor, left.at(col, j)));
        right.at(r, j) = F.sub(right.at(r, j), F.mul(factor, right.at(col, j)));
      }
    }
  }
  return right;
}

Fq MatrixFq::det() const {
  const GfField& F = *field;
  MatrixFq m = *this;
  Fq d = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(col, col));
    Fq inv = F.inv(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      Fq factor = F.mul(m.at(r, col), inv);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j) m.at(r, j) = F.sub(m.at(r, j), F.mul(factor, m.at(col, j)));
    }
  }
  return d;
}

std::string MatrixFq::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < n; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

int matrix_rank(MatrixFq m) {
  const GfField& F = *m.field;
  int rank = 0;
  int n = m.n;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    Fq inv = F.inv(m.at(rank, col));
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      Fq factor = F.mul(m.at(r, col), inv);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) m.at(r, j) = F.sub(m.at(r, j), F.mul(factor, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

int nu(const MatrixFq& x) {
  const GfField& F = *x.field;
  int best = 0;
  for (int lam = 1; lam < F.q(); ++lam) {
    MatrixFq m = x.scaled(static_cast<Fq>(lam));
    for (int i = 0; i < m.n; ++i) m.at(i, i) = F.sub(m.at(i, i), 1);
    best = std::max(best, kernel_dimension(m));
  }
  return x.n - best;
}

MatrixFq singer_matrix(int n, int q) {
  const GfField& F = GfField::get(q);
  // least primitive polynomial x^n - (c_{n-1} x^{n-1} + ... + c_0), scanning
  // the coefficient encoding upward; primitivity = the companion matrix has
  // multiplicative order q^n - 1
  std::uint64_t group_order = 1;
  for (int i = 0; i < n; ++i) group_order *= static_cast<std::uint64_t>(q);
  group_order -= 1;

  std::vector<std::uint64_t> prime_factors;
  {
    std::uint64_t m = group_order;
    for (std::uint64_t d = 2; d * d <= m; ++d)
      while (m % d == 0) {
        if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
        m /= d;
      }
    if (m > 1) prime_factors.push_back(m);
  }

  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);
  for (std::uint64_t code = 1; code < total; ++code) {
    // companion matrix of x^n + a_{n-1} x^{n-1} + ... + a_0, row convention:
    // e_i -> e_{i+1}, e_{n-1} -> -(a_0 e_0 + ... + a_{n-1} e_{n-1})
    std::vector<Fq> coeff(n);
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      coeff[i] = static_cast<Fq>(c % q);
      c /= q;
    }
    if (coeff[0] == 0) continue;  // x divides, not irreducible
    MatrixFq m(n, F);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    for (int j = 0; j < n; ++j) m.at(n - 1, j) = F.neg(coeff[j]);

    // order == q^n - 1 exactly
    if (!(m.pow(group_order) == MatrixFq::identity(n, F))) continue;
    bool primitive = true;
    for (std::uint64_t pf : prime_factors) {
      if (m.pow(group_order / pf) == MatrixFq::identity(n, F)) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;

    if (m.det() != 1 && q > 2) m = m.pow(static_cast<std::uint64_t>(q - 1));
    if (m.det() != 1)
      fail(ErrorKind::Internal, "singer matrix could not be adjusted into SL");
    return m;
  }
  fail(ErrorKind::Internal, "no primitive polynomial found");
}

MatrixFq transvection_matrix(int n, int q) {
  const GfField& F = GfField::get(q);
  MatrixFq m = MatrixFq::identity(n, F);
  m.at(0, 1) = 1;
  return m;
}

Rational nu_ratio_bound(long long nu_t, long long nu_s) {
  if (nu_s == 0) fail(ErrorKind::DivisionByZero, "nu(S) must be positive");
  long long g = std::gcd(nu_t, nu_s);
  if (g == 0) return {0, 1};
  return {nu_t / g, nu_s / g};
}

}  // namespace simdiag
