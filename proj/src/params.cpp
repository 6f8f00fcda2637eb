#include "belyi/params.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace belyi {

Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }

Residue::Residue(Integer value, Integer modulus) : value_(0), modulus_(modulus) {
  if (modulus <= 0) {
    throw RangeError("residue modulus must be positive");
  }
  value_ = mod(value, modulus);
}

Residue Residue::inverse() const {
  // extended Euclid on (value, modulus)
  Integer old_r = value_, r = modulus_;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    std::ostringstream msg;
    msg << value_ << " is not invertible modulo " << modulus_ << " (gcd " << old_r << ")";
    throw NotCoprimeError(msg.str());
  }
  return {old_s, modulus_};
}

namespace {
void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw RangeError("residue arithmetic across different moduli");
  }
}
}  // namespace

Residue operator+(Residue a, Residue b) {
  require_same_modulus(a, b);
  return {a.value_ + b.value_, a.modulus_};
}

Residue operator-(Residue a, Residue b) {
  require_same_modulus(a, b);
  return {a.value_ - b.value_, a.modulus_};
}

Residue operator*(Residue a, Residue b) {
  require_same_modulus(a, b);
  return {a.value_ * b.value_, a.modulus_};
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus() << ")";
}

CurveParams::CurveParams(Integer n, Integer k, Integer c)
    : n_(n), k_(k), c_(c), inertia_{Residue{1, n}, Residue{k, n}, Residue{-(k + 1), n}} {}

Integer CurveParams::k_inverse() const { return residue(k_).inverse().value(); }

CurveParams validate(Integer n, Integer k) {
  if (n < 3) {
    throw RangeError("n must be at least 3, got " + std::to_string(n));
  }
  if (k < 1 || k > n - 2) {
    throw RangeError("k must lie in [1, " + std::to_string(n - 2) + "], got " + std::to_string(k));
  }
  const Integer g = gcd(n, k * (k + 1));
  if (g != 1) {
    std::ostringstream msg;
    msg << "gcd(n, k(k+1)) = gcd(" << n << ", " << k * (k + 1) << ") = " << g
        << ", must be 1";
    if (n % 2 == 0) {
      msg << "; n must be odd since k(k+1) is always even";
    }
    throw RamificationError(msg.str(), g);
  }
  const Integer c = Residue{k + 1, n}.inverse().value();
  return CurveParams{n, k, c};
}

bool is_valid(Integer n, Integer k) {
  return n >= 3 && k >= 1 && k <= n - 2 && gcd(n, k * (k + 1)) == 1;
}

std::vector<CurveParams> valid_pairs(Integer max_n) {
  std::vector<CurveParams> out;
  for (Integer n = 3; n <= max_n; ++n) {
    for (Integer k = 1; k <= n - 2; ++k) {
      if (is_valid(n, k)) {
        out.push_back(validate(n, k));
      }
    }
  }
  return out;
}

std::vector<Residue> s_set(const CurveParams& p) {
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(p.c() - 1));
  for (Integer j = 1; j <= p.c() - 1; ++j) {
    out.push_back(p.residue(j * (p.k() + 1)));
  }
  return out;
}

Residue fermat_auto_image(const CurveParams& p, Residue i, Residue j) {
  return i + p.k() * j;
}

}  // namespace belyi
