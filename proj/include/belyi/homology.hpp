#pragma once

#include <array>
#include <vector>

#include "belyi/wedge.hpp"

namespace belyi {

/// Coefficients t_1 .. t_{(n-1)/2} of Delta in terms of the invariants T_r.
struct TDecomposition {
  Integer n;
  /// coefficients[r-1] = t_r.
  std::vector<Integer> coefficients;

  Integer t(Integer r) const { return coefficients.at(static_cast<std::size_t>(r - 1)); }
  friend bool operator==(const TDecomposition&, const TDecomposition&) = default;
};

/// Inertia type (a, b, c') at the points over 0, 1, infinity.
class InertiaType {
 public:
  /// Throws UnsupportedInertiaError unless a + b + c' = 0 mod n with each
  /// component coprime to n.
  InertiaType(Integer n, Integer a, Integer b, Integer c);

  Integer n() const { return n_; }
  const std::array<Residue, 3>& components() const { return components_; }

 private:
  Integer n_;
  std::array<Residue, 3> components_;
};

/// 1 iff c*d mod n lies in [1, c-1], i.e. d = j(k+1) mod n for some 1 <= j <= c-1.
Integer plus_indicator(const CurveParams& p, Integer d);
/// 1 iff c*(d+1) mod n lies in [1, c-1], i.e. d = j(k+1) - 1 mod n.
Integer minus_indicator(const CurveParams& p, Integer d);

/// Delta = sum_{I<J} c_{I,J} [E_I]^[E_J] with c_{I,J} = plus(J-I) - minus(J-I).
WedgeClass closed_form_delta(const CurveParams& p);

/// T_r = sum_i [E_i]^[E_{i+r}] with E_0 = 0 and indices mod n, 1 <= r <= n-1.
WedgeClass expand_T(const CurveParams& p, Integer r);

/// t_r = plus(r) - minus(r) for 1 <= r <= (n-1)/2.
TDecomposition t_decomposition(const CurveParams& p);

/// sum_r t_r T_r.
WedgeClass recompose(const CurveParams& p, const TDecomposition& t);

/// Matrix of epsilon on H_1 in the basis [E_1..E_{n-1}]: column i-1 is the
/// image [E_{i+1}] - [E_1] of [E_i], with [E_n] = [E_0] = 0.
IntMatrix epsilon_matrix(const CurveParams& p);

/// epsilon_matrix(p) * x, computed in O(n^2) from the shift-minus-rank-one
/// structure of the matrix.
IntMatrix apply_epsilon(const CurveParams& p, const IntMatrix& x);

H1Class eps_h1(const CurveParams& p, const H1Class& v);

/// Induced action on the exterior square, M A M^T on the Gram matrix.
WedgeClass eps_wedge(const CurveParams& p, const WedgeClass& w);

/// Relabels [E_i] -> [E_{j i mod n}] in both slots. Throws NotCoprimeError if
/// gcd(j, n) > 1.
WedgeClass substitute(const CurveParams& p, const WedgeClass& w, Residue j);

/// For t = (j, jk, -j(k+1)) returns substitute(Delta_{n,k}, j^{-1}); this is
/// defined up to an overall sign. Throws UnsupportedInertiaError for other
/// shapes.
WedgeClass general_inertia_delta(const CurveParams& p, const InertiaType& t);

/// The (j, k) such that t = (j, jk, -j(k+1)) with (n, k) valid, if any.
struct InertiaDecomposition {
  Integer j;
  Integer k;
};
InertiaDecomposition decompose_inertia(const InertiaType& t);

/// Homology image [E_{jk}] - [E_{i+jk}] + [E_i] of the Fermat loop E_{i,j}.
H1Class fermat_image(const CurveParams& p, Residue i, Residue j);

/// Exact determinant of the antisymmetric Gram matrix of w.
Integer pfaffian_check(const CurveParams& p, const WedgeClass& w);

}  // namespace belyi
