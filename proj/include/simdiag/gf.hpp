#pragma once

#include <cstdint>
#include <vector>

namespace simdiag {

using Fq = std::uint16_t;

// Table-driven arithmetic for GF(p^e), q <= 512. Elements are encoded as
// integers in [0, q): the element with polynomial coefficients (a_0, ..,
// a_{e-1}) over F_p has code sum a_i p^i; in particular 0 and 1 are the
// additive and multiplicative identities. For e > 1 the modulus is the least
// monic irreducible of degree e in this coefficient encoding.
class GfField {
 public:
  static const GfField& get(int q);  // cached; throws NotPrimePower

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int extension_degree() const { return e_; }
  Fq primitive_element() const { return primitive_; }
  const std::vector<int>& modulus_coeffs() const { return irreducible_; }

  Fq add(Fq a, Fq b) const { return add_[idx(a, b)]; }
  Fq sub(Fq a, Fq b) const { return add_[idx(a, neg_[b])]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq mul(Fq a, Fq b) const { return mul_[idx(a, b)]; }
  Fq inv(Fq a) const;  // throws DivisionByZero on 0
  Fq pow(Fq a, std::uint64_t e) const;
  Fq frobenius(Fq a) const { return pow(a, static_cast<std::uint64_t>(p_)); }
  std::uint32_t element_order(Fq a) const;

 private:
  explicit GfField(int q);
  std::size_t idx(Fq a, Fq b) const { return static_cast<std::size_t>(a) * q_ + b; }

  int p_ = 0, e_ = 0, q_ = 0;
  Fq primitive_ = 0;
  std::vector<Fq> add_, mul_, neg_, inv_;
  std::vector<int> irreducible_;  // coefficients a_0..a_e of the modulus
};

bool is_prime_power(int q, int* p_out = nullptr, int* e_out = nullptr);

}  // namespace simdiag
