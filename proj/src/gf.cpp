#include "simdiag/gf.hpp"

#include <map>
#include <mutex>

#include "simdiag/errors.hpp"

namespace simdiag {

namespace {

// dense polynomial arithmetic over F_p, coefficient vectors low-degree first
using Poly = std::vector<int>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  std::vector<int> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // reduce by the monic modulus
  for (std::size_t d = prod.size(); d-- > mod.size() - 1;) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t j = 0; j + 1 < mod.size(); ++j) {
      std::size_t pos = d - (mod.size() - 1) + j;
      prod[pos] = ((prod[pos] - c * mod[j]) % p + p) % p;
    }
  }
  prod.resize(mod.size() - 1);
  return prod;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& mod, int p) {
  Poly acc{1};
  acc.resize(mod.size() - 1, 0);
  base.resize(mod.size() - 1, 0);
  while (e) {
    if (e & 1) acc = poly_mul_mod(acc, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return acc;
}

bool poly_is_zero(const Poly& a) { return poly_trim(a).empty(); }

Poly poly_gcd(Poly a, Poly b, int p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // a mod b with b made monic
    int lead_inv = 1;
    for (int t = 1; t < p; ++t)
      if (t * b.back() % p == 1) lead_inv = t;
    Poly r = a;
    while (r.size() >= b.size() && !r.empty()) {
      int c = r.back() * lead_inv % p;
      std::size_t shift = r.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        r[shift + j] = ((r[shift + j] - c * b[j]) % p + p) % p;
      r = poly_trim(std::move(r));
      if (r.size() < b.size()) break;
    }
    a = std::move(b);
    b = poly_trim(std::move(r));
  }
  return a;
}

// f monic of degree e: irreducible iff x^{p^e} = x (mod f) and
// gcd(x^{p^{e/r}} - x, f) = 1 for every prime r dividing e.
bool poly_irreducible(const Poly& f, int p, int e) {
  Poly x{0, 1};
  std::uint64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= static_cast<std::uint64_t>(p);
  Poly xq = poly_pow_mod(x, pe, f, p);
  Poly diff = xq;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  if (!poly_is_zero(diff)) return false;
  for (int r = 2; r <= e; ++r) {
    if (e % r != 0) continue;
    bool rprime = true;
    for (int d = 2; d * d <= r; ++d)
      if (r % d == 0) rprime = false;
    if (!rprime) continue;
    std::uint64_t per = 1;
    for (int i = 0; i < e / r; ++i) per *= static_cast<std::uint64_t>(p);
    Poly xr = poly_pow_mod(x, per, f, p);
    xr.resize(std::max<std::size_t>(xr.size(), 2), 0);
    xr[1] = ((xr[1] - 1) % p + p) % p;
    Poly g = poly_gcd(f, xr, p);
    if (g.size() != 1) return false;  // shares a root with a proper subfield
  }
  return true;
}

}  // namespace

bool is_prime_power(int q, int* p_out, int* e_out) {
  if (q < 2) return false;
  int p = 0;
  int n = q;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

GfField::GfField(int q) {
  int p, e;
  if (!is_prime_power(q, &p, &e) || q > 512)
    fail(ErrorKind::NotPrimePower, "q = " + std::to_string(q) + " is not a supported prime power");
  p_ = p;
  e_ = e;
  q_ = q;

  if (e == 1) {
    irreducible_ = {0, 1};  // conventionally x, unused
  } else {
    // least monic irreducible of degree e in the integer coefficient encoding
    bool found = false;
    for (int code = 0; code < q && !found; ++code) {
      Poly f(e + 1, 0);
      f[e] = 1;
      int c = code;
      for (int i = 0; i < e; ++i) {
        f[i] = c % p;
        c /= p;
      }
      if (poly_irreducible(f, p, e)) {
        irreducible_ = f;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::Internal, "no irreducible polynomial found");
  }

  auto decode = [&](Fq a) {
    Poly v(e_, 0);
    int c = a;
    for (int i = 0; i < e_; ++i) {
      v[i] = c % p_;
      c /= p_;
    }
    return v;
  };
  auto encode = [&](const Poly& v) {
    int c = 0;
    for (int i = e_ - 1; i >= 0; --i) c = c * p_ + (i < static_cast<int>(v.size()) ? v[i] : 0);
    return static_cast<Fq>(c);
  };

  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    Poly va = decode(static_cast<Fq>(a));
    Poly negv(e_);
    for (int i = 0; i < e_; ++i) negv[i] = (p_ - va[i]) % p_;
    neg_[a] = encode(negv);
    for (int b = 0; b < q; ++b) {
      Poly vb = decode(static_cast<Fq>(b));
      Poly sum(e_);
      for (int i = 0; i < e_; ++i) sum[i] = (va[i] + vb[i]) % p_;
      add_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] = encode(sum);
      Poly prod = e_ == 1 ? Poly{va[0] * vb[0] % p_} : poly_mul_mod(va, vb, irreducible_, p_);
      mul_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] = encode(prod);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] == 1) inv_[a] = static_cast<Fq>(b);

  for (int a = 2; a < q; ++a) {
    if (element_order(static_cast<Fq>(a)) == static_cast<std::uint32_t>(q - 1)) {
      primitive_ = static_cast<Fq>(a);
      break;
    }
  }
  if (q == 2) primitive_ = 1;
}

Fq GfField::inv(Fq a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

Fq GfField::pow(Fq a, std::uint64_t e) const {
  Fq acc = 1;
  Fq base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint32_t GfField::element_order(Fq a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "order of zero");
  std::uint32_t n = 1;
  Fq x = a;
  while (x != 1) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

const GfField& GfField::get(int q) {
  static std::map<int, GfField> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lk(mutex);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, GfField(q)).first;
  return it->second;
}

}  // namespace simdiag
