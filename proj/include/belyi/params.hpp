#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "belyi/errors.hpp"

namespace belyi {

using Integer = std::int64_t;

/// Canonical representative of a-mod-n in [0, n-1]; n must be positive.
constexpr Integer mod(Integer a, Integer n) {
  const Integer r = a % n;
  return r < 0 ? r + n : r;
}

Integer gcd(Integer a, Integer b);

/// Residue class modulo a fixed positive modulus. The stored value is always
/// the canonical representative, so equality is plain value comparison.
class Residue {
 public:
  Residue(Integer value, Integer modulus);

  Integer value() const { return value_; }
  Integer modulus() const { return modulus_; }

  /// Multiplicative inverse; throws NotCoprimeError when gcd(value, modulus) > 1.
  Residue inverse() const;

  Residue operator-() const { return {-value_, modulus_}; }
  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator*(Residue a, Residue b);
  friend Residue operator+(Residue a, Integer b) { return {a.value_ + b, a.modulus_}; }
  friend Residue operator-(Residue a, Integer b) { return {a.value_ - b, a.modulus_}; }
  friend Residue operator*(Integer a, Residue b) { return {mod(a, b.modulus_) * b.value_, b.modulus_}; }

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  Integer value_;
  Integer modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// Validated parameters (n, k) of the curve v^n = u (1-u)^k together with the
/// constants derived from them. Only `validate` constructs instances.
class CurveParams {
 public:
  Integer n() const { return n_; }
  Integer k() const { return k_; }
  /// Inverse of k+1 modulo n, in [1, n-1].
  Integer c() const { return c_; }
  Integer genus() const { return (n_ - 1) / 2; }
  /// Inertia type (1, k, -(k+1)) at the points over 0, 1, infinity.
  const std::array<Residue, 3>& inertia() const { return inertia_; }

  Residue residue(Integer value) const { return {value, n_}; }
  /// k^{-1} mod n; exists because gcd(n, k) = 1.
  Integer k_inverse() const;

  friend bool operator==(const CurveParams& a, const CurveParams& b) {
    return a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  CurveParams(Integer n, Integer k, Integer c);
  friend CurveParams validate(Integer n, Integer k);

  Integer n_;
  Integer k_;
  Integer c_;
  std::array<Residue, 3> inertia_;
};

/// Checks 3 <= n, 1 <= k <= n-2 and gcd(n, k(k+1)) = 1.
/// Throws RangeError or RamificationError.
CurveParams validate(Integer n, Integer k);

/// True iff `validate(n, k)` would succeed.
bool is_valid(Integer n, Integer k);

/// All valid (n, k) with 3 <= n <= max_n, ordered by n then k.
std::vector<CurveParams> valid_pairs(Integer max_n);

/// { j(k+1) mod n : 1 <= j <= c-1 }, listed in order of j.
std::vector<Residue> s_set(const CurveParams& p);

/// Power of epsilon to which the Fermat automorphism eps0^i eps1^j descends:
/// (i + k j) mod n.
Residue fermat_auto_image(const CurveParams& p, Residue i, Residue j);

}  // namespace belyi
