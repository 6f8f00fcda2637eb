#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "belyi/homology.hpp"

namespace belyi {

using Matrix2 = Eigen::Matrix<Integer, 2, 2>;

/// The free generators A = [[1,2],[0,1]] and B = [[1,0],[2,1]] of Gamma(2)/{+-1}.
enum class GammaGenerator { A, B };

struct GammaLetter {
  GammaGenerator generator;
  int sign;
  friend bool operator==(const GammaLetter&, const GammaLetter&) = default;
};

/// Free word in A, B and their inverses.
struct GammaWord {
  std::vector<GammaLetter> letters;

  static GammaWord power(GammaGenerator g, Integer e);
  GammaWord& operator*=(const GammaWord& o);
  friend GammaWord operator*(GammaWord a, const GammaWord& b) { return a *= b; }
  GammaWord inverse() const;
  /// Exponent sums (a, b) of A and B.
  std::pair<Integer, Integer> exponent_sums() const;
};

std::string to_string(const GammaWord& w);

Matrix2 matrix_A();
Matrix2 matrix_B();
/// tau = [[0,-1],[1,-1]], sending 0 to 1 and i*infinity to 0.
Matrix2 matrix_tau();
/// Product of the letters; overflow-checked.
Matrix2 to_matrix(const GammaWord& w);

/// A cusp p/q of P^1(Q) in lowest terms with q >= 0; infinity is 1/0.
struct Cusp {
  Integer numerator;
  Integer denominator;

  static Cusp make(Integer p, Integer q);
  static Cusp infinity() { return {1, 0}; }
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// Moebius action of an integer matrix on a cusp.
Cusp act(const Matrix2& g, const Cusp& x);

/// Generators of Phi_k besides the commutator subgroup: A B^{-(k^{-1} mod n)}, A^n, B^n.
std::vector<GammaWord> phi_generators(const CurveParams& p);

/// Right coset Phi_k A^r that contains w; r = (a + k b) mod n.
using Coset = Residue;
Coset coset_of(const CurveParams& p, const GammaWord& w);

/// Integer combination of the symbols [A^r tau] and (before reduction) [A^r],
/// r = 0..n-1.
struct SymbolCombination {
  IntVector tau;    ///< coefficient of [A^r tau]
  IntVector plain;  ///< coefficient of [A^r]

  static SymbolCombination zero(const CurveParams& p);
  static SymbolCombination tau_symbol(const CurveParams& p, Integer r);
  static SymbolCombination plain_symbol(const CurveParams& p, Integer r);
  /// rho_r = [A^r tau] - [tau].
  static SymbolCombination rho(const CurveParams& p, Integer r);

  bool is_reduced() const { return plain.isZero(); }

  SymbolCombination& operator+=(const SymbolCombination& o);
  SymbolCombination& operator-=(const SymbolCombination& o);
  friend SymbolCombination operator+(SymbolCombination a, const SymbolCombination& b) { return a += b; }
  friend SymbolCombination operator-(SymbolCombination a, const SymbolCombination& b) { return a -= b; }
  friend SymbolCombination operator*(Integer s, SymbolCombination a) {
    a.tau *= s;
    a.plain *= s;
    return a;
  }
  friend bool operator==(const SymbolCombination& a, const SymbolCombination& b) {
    return a.tau == b.tau && a.plain == b.plain;
  }
};

/// Multiplicities on the cusps over u = 0, 1, infinity.
struct CuspDivisor {
  Integer cusp_0 = 0;
  Integer cusp_1 = 0;
  Integer cusp_infinity = 0;

  bool is_zero() const { return cusp_0 == 0 && cusp_1 == 0 && cusp_infinity == 0; }
  friend bool operator==(const CuspDivisor&, const CuspDivisor&) = default;
};

/// Reduced expression of [A^r] over the [A^s tau], from
/// [A^r] = [A^{r-1}] + [A^{r-1} tau] - [A^{r-k} tau] with [A^0] = 0.
/// Any integer r is accepted and taken mod n.
IntVector reduce_plain_symbol(const CurveParams& p, Integer r);

SymbolCombination reduce_symbols(const CurveParams& p, const SymbolCombination& s);

/// Each [A^r tau] runs from the cusp over 1 to the cusp over 0. Throws
/// UnreducedError on [A^r] terms.
CuspDivisor boundary(const CurveParams& p, const SymbolCombination& s);

bool is_cycle(const CurveParams& p, const SymbolCombination& s);

/// Coordinates of a cycle in the basis rho_1..rho_{n-1}. Throws NotACycleError.
IntVector rho_coordinates(const CurveParams& p, const SymbolCombination& s);

/// rho_i = [E_i]. Throws NotACycleError.
H1Class rho_to_E(const CurveParams& p, const SymbolCombination& s);

/// Left action of A^m: [A^r tau] -> [A^{r+m} tau].
SymbolCombination shift_symbols(const CurveParams& p, const SymbolCombination& s, Integer m);

/// Exact rank of the cycle lattice spanned by rho_1..rho_{n-1}.
Integer cycle_rank(const CurveParams& p);

}  // namespace belyi
