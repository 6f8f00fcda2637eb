#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <map>
#include <utility>

#include "belyi/params.hpp"

namespace belyi {

using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Element of H_1 with coordinates over [E_1], ..., [E_{n-1}].
///
/// The loop E_0 is trivial, so every constructor that names generator 0 (or
/// any index congruent to 0 mod n) contributes nothing.
class H1Class {
 public:
  /// Zero class for n generators E_0..E_{n-1}.
  explicit H1Class(Integer n);
  H1Class(Integer n, IntVector coords);

  /// [E_i] for an arbitrary integer index, reduced mod n.
  static H1Class basis(Integer n, Integer i);

  Integer n() const { return n_; }
  Integer rank() const { return n_ - 1; }
  /// Coordinate of [E_i], 1 <= i <= n-1 (index 0 reads as 0).
  Integer operator[](Integer i) const;
  const IntVector& coords() const { return coords_; }

  bool is_zero() const { return coords_.isZero(); }

  H1Class& operator+=(const H1Class& o);
  H1Class& operator-=(const H1Class& o);
  friend H1Class operator+(H1Class a, const H1Class& b) { return a += b; }
  friend H1Class operator-(H1Class a, const H1Class& b) { return a -= b; }
  friend H1Class operator*(Integer s, H1Class a) {
    a.coords_ *= s;
    return a;
  }
  friend bool operator==(const H1Class& a, const H1Class& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }

 private:
  Integer n_;
  IntVector coords_;
};

std::ostream& operator<<(std::ostream& os, const H1Class& v);

/// Sparse element of the exterior square of H_1, stored over the basis
/// [E_I] ^ [E_J] with 1 <= I < J <= n-1. Zero coefficients are never stored.
class WedgeClass {
 public:
  using Key = std::pair<Integer, Integer>;
  using Terms = std::map<Key, Integer>;

  explicit WedgeClass(Integer n);

  /// Adds coeff * [E_i] ^ [E_j]. Indices are taken mod n; a zero index or
  /// i == j contributes nothing, and i > j is reordered with a sign flip.
  void add(Integer i, Integer j, Integer coeff);

  Integer n() const { return n_; }
  /// Coefficient of [E_i] ^ [E_j] with the same sign rules as `add`.
  Integer coefficient(Integer i, Integer j) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Antisymmetric (n-1)x(n-1) Gram matrix, entry (I-1, J-1) = coefficient.
  IntMatrix to_matrix() const;
  /// Reads the strict upper triangle of an (n-1)x(n-1) matrix.
  static WedgeClass from_matrix(Integer n, const IntMatrix& m);

  WedgeClass& operator+=(const WedgeClass& o);
  WedgeClass& operator-=(const WedgeClass& o);
  WedgeClass& operator*=(Integer s);
  friend WedgeClass operator+(WedgeClass a, const WedgeClass& b) { return a += b; }
  friend WedgeClass operator-(WedgeClass a, const WedgeClass& b) { return a -= b; }
  friend WedgeClass operator-(WedgeClass a) { return a *= -1; }
  friend WedgeClass operator*(Integer s, WedgeClass a) { return a *= s; }
  friend bool operator==(const WedgeClass&, const WedgeClass&) = default;

 private:
  Integer n_;
  Terms terms_;
};

/// Bilinear wedge of two H_1 classes.
WedgeClass wedge(const H1Class& a, const H1Class& b);

std::ostream& operator<<(std::ostream& os, const WedgeClass& w);

}  // namespace belyi
