// Regenerates data/j1.gens: the sporadic group J1 in its 266-point action.
//
// J1 is the subgroup of GL_7(11) generated by the cyclic coordinate shift Y
// and the fixed matrix Z below. The degree-266 permutation action is the
// action on right cosets of a subgroup of order 660; J1 has a unique
// conjugacy class of such subgroups (isomorphic to PSL_2(11)), found here by
// a seeded random search for a (2, 3, 11)-generated pair.

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace {

constexpr int P = 11, N = 7;
using Mat = std::array<std::uint8_t, N * N>;

Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      int v = a[i * N + k];
      if (!v) continue;
      for (int j = 0; j < N; ++j)
        c[i * N + j] = static_cast<std::uint8_t>((c[i * N + j] + v * b[k * N + j]) % P);
    }
  return c;
}

Mat identity() {
  Mat m{};
  for (int i = 0; i < N; ++i) m[i * N + i] = 1;
  return m;
}

int order_of(const Mat& m) {
  Mat x = m;
  int n = 1;
  while (!(x == identity())) {
    x = mul(x, m);
    if (++n > 40) return -1;
  }
  return n;
}

std::vector<Mat> closure(const std::vector<Mat>& gens, std::size_t cap) {
  std::set<Mat> seen{identity()};
  std::vector<Mat> elems{identity()};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const Mat& g : gens) {
      Mat x = mul(elems[head], g);
      if (seen.insert(x).second) {
        elems.push_back(x);
        if (elems.size() > cap) return elems;
      }
    }
  return elems;
}

}  // namespace

int main(int argc, char** argv) {
  const char* out_path = argc > 1 ? argv[1] : "data/j1.gens";

  Mat y{}, z{};
  for (int i = 0; i < N; ++i) y[i * N + (i + 1) % N] = 1;
  const int zraw[N][N] = {
      {-3, 2, -1, -1, -3, -1, -3}, {-2, 1, 1, 3, 1, 3, 3},   {-1, -1, -3, -1, -3, -3, 2},
      {-1, -3, -1, -3, -3, 2, -1}, {-3, -1, -3, -3, 2, -1, -1}, {1, 3, 3, -2, 1, 1, 3},
      {3, 3, -2, 1, 1, 3, 1},
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      z[i * N + j] = static_cast<std::uint8_t>(((zraw[i][j] % P) + P) % P);

  std::mt19937 rng(2024);
  auto random_word = [&] {
    Mat w = identity();
    int len = 3 + static_cast<int>(rng() % 18);
    for (int i = 0; i < len; ++i) w = mul(w, (rng() & 1) ? y : z);
    return w;
  };

  // power random elements down to an involution and an order-3 element whose
  // product has order 11; such a pair generating 660 elements spans the
  // PSL_2(11) subgroup
  std::vector<Mat> subgroup;
  while (subgroup.empty()) {
    Mat a = random_word(), b = random_word();
    int oa = order_of(a), ob = order_of(b);
    if (oa <= 0 || ob <= 0 || oa % 2 != 0 || ob % 3 != 0) continue;
    Mat a2 = a;
    for (int i = 1; i < oa / 2; ++i) a2 = mul(a2, a);
    Mat b3 = b;
    for (int i = 1; i < ob / 3; ++i) b3 = mul(b3, b);
    if (order_of(a2) != 2 || order_of(b3) != 3) continue;
    if (order_of(mul(a2, b3)) != 11) continue;
    auto elems = closure({a2, b3}, 700);
    if (elems.size() == 660) subgroup = std::move(elems);
  }

  auto coset_label = [&](const Mat& g) {
    Mat best{};
    bool first = true;
    for (const Mat& h : subgroup) {
      Mat x = mul(h, g);
      if (first || x < best) {
        best = x;
        first = false;
      }
    }
    return best;
  };

  std::map<Mat, int> index;
  std::vector<Mat> reps;
  auto point_of = [&](const Mat& g) {
    Mat lab = coset_label(g);
    auto [it, inserted] = index.emplace(lab, static_cast<int>(reps.size()));
    if (inserted) reps.push_back(lab);
    return it->second;
  };

  point_of(identity());
  std::vector<int> perm_y, perm_z;
  for (std::size_t head = 0; head < reps.size(); ++head) {
    Mat rep = reps[head];
    perm_y.push_back(point_of(mul(rep, y)));
    perm_z.push_back(point_of(mul(rep, z)));
  }
  if (reps.size() != 266) {
    std::fprintf(stderr, "unexpected coset count %zu\n", reps.size());
    return 1;
  }

  FILE* f = std::fopen(out_path, "w");
  if (!f) {
    std::fprintf(stderr, "cannot write %s\n", out_path);
    return 1;
  }
  std::fprintf(f, "# J1 in its 266-point action, derived from the 7-dimensional\n");
  std::fprintf(f, "# representation over GF(11); regenerate with simdiag-make-j1-gens\n");
  std::fprintf(f, "degree 266\n");
  for (const auto* v : {&perm_y, &perm_z}) {
    std::fprintf(f, "img");
    for (int x : *v) std::fprintf(f, " %d", x);
    std::fprintf(f, "\n");
  }
  std::fclose(f);
  std::printf("wrote %s\n", out_path);
  return 0;
}
