#include "belyi/modsym.hpp"

#include <numeric>
#include <sstream>

#include "belyi/determinant.hpp"

namespace belyi {

GammaWord GammaWord::power(GammaGenerator g, Integer e) {
  GammaWord w;
  const int sign = e < 0 ? -1 : 1;
  for (Integer i = 0; i < (e < 0 ? -e : e); ++i) w.letters.push_back({g, sign});
  return w;
}

GammaWord& GammaWord::operator*=(const GammaWord& o) {
  letters.insert(letters.end(), o.letters.begin(), o.letters.end());
  return *this;
}

GammaWord GammaWord::inverse() const {
  GammaWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    w.letters.push_back({it->generator, -it->sign});
  }
  return w;
}

std::pair<Integer, Integer> GammaWord::exponent_sums() const {
  Integer a = 0, b = 0;
  for (const GammaLetter& l : letters) {
    (l.generator == GammaGenerator::A ? a : b) += l.sign;
  }
  return {a, b};
}

std::string to_string(const GammaWord& w) {
  std::ostringstream os;
  for (const GammaLetter& l : w.letters) {
    os << (l.generator == GammaGenerator::A ? 'A' : 'B');
    if (l.sign < 0) os << "^-1";
  }
  return w.letters.empty() ? "1" : os.str();
}

Matrix2 matrix_A() { return (Matrix2() << 1, 2, 0, 1).finished(); }
Matrix2 matrix_B() { return (Matrix2() << 1, 0, 2, 1).finished(); }
Matrix2 matrix_tau() { return (Matrix2() << 0, -1, 1, -1).finished(); }

namespace {

Matrix2 checked_product(const Matrix2& x, const Matrix2& y) {
  Matrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Integer a = 0, b = 0, s = 0;
      if (__builtin_mul_overflow(x(i, 0), y(0, j), &a) ||
          __builtin_mul_overflow(x(i, 1), y(1, j), &b) || __builtin_add_overflow(a, b, &s)) {
        throw OverflowError("Gamma(2) word too long to multiply out exactly");
      }
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace

Matrix2 to_matrix(const GammaWord& w) {
  // A^{-1} and B^{-1} have the off-diagonal 2 negated.
  const Matrix2 a = matrix_A(), b = matrix_B();
  const Matrix2 a_inv = (Matrix2() << 1, -2, 0, 1).finished();
  const Matrix2 b_inv = (Matrix2() << 1, 0, -2, 1).finished();
  Matrix2 out = Matrix2::Identity();
  for (const GammaLetter& l : w.letters) {
    const bool is_a = l.generator == GammaGenerator::A;
    out = checked_product(out, is_a ? (l.sign > 0 ? a : a_inv) : (l.sign > 0 ? b : b_inv));
  }
  return out;
}

Cusp Cusp::make(Integer p, Integer q) {
  if (p == 0 && q == 0) throw RangeError("0/0 is not a cusp");
  const Integer g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

Cusp act(const Matrix2& g, const Cusp& x) {
  return Cusp::make(g(0, 0) * x.numerator + g(0, 1) * x.denominator,
                    g(1, 0) * x.numerator + g(1, 1) * x.denominator);
}

std::vector<GammaWord> phi_generators(const CurveParams& p) {
  const Integer n = p.n();
  return {GammaWord::power(GammaGenerator::A, 1) * GammaWord::power(GammaGenerator::B, -p.k_inverse()),
          GammaWord::power(GammaGenerator::A, n), GammaWord::power(GammaGenerator::B, n)};
}

Coset coset_of(const CurveParams& p, const GammaWord& w) {
  const auto [a, b] = w.exponent_sums();
  return p.residue(a + p.k() * b);
}

SymbolCombination SymbolCombination::zero(const CurveParams& p) {
  return {IntVector::Zero(p.n()), IntVector::Zero(p.n())};
}

SymbolCombination SymbolCombination::tau_symbol(const CurveParams& p, Integer r) {
  SymbolCombination s = zero(p);
  s.tau(mod(r, p.n())) = 1;
  return s;
}

SymbolCombination SymbolCombination::plain_symbol(const CurveParams& p, Integer r) {
  SymbolCombination s = zero(p);
  s.plain(mod(r, p.n())) = 1;
  return s;
}

SymbolCombination SymbolCombination::rho(const CurveParams& p, Integer r) {
  return tau_symbol(p, r) - tau_symbol(p, 0);
}

SymbolCombination& SymbolCombination::operator+=(const SymbolCombination& o) {
  tau += o.tau;
  plain += o.plain;
  return *this;
}

SymbolCombination& SymbolCombination::operator-=(const SymbolCombination& o) {
  tau -= o.tau;
  plain -= o.plain;
  return *this;
}

IntVector reduce_plain_symbol(const CurveParams& p, Integer r) {
  const Integer n = p.n();
  IntVector acc = IntVector::Zero(n);  // [A^0] = 0
  for (Integer s = 1; s <= mod(r, n); ++s) {
    acc(mod(s - 1, n)) += 1;
    acc(mod(s - p.k(), n)) -= 1;
  }
  return acc;
}

SymbolCombination reduce_symbols(const CurveParams& p, const SymbolCombination& s) {
  SymbolCombination out{s.tau, IntVector::Zero(p.n())};
  for (Integer r = 0; r < p.n(); ++r) {
    if (s.plain(r) != 0) out.tau += s.plain(r) * reduce_plain_symbol(p, r);
  }
  return out;
}

CuspDivisor boundary(const CurveParams& p, const SymbolCombination& s) {
  if (!s.is_reduced()) {
    throw UnreducedError("boundary needs a combination of [A^r tau] symbols only; reduce first");
  }
  (void)p;
  const Integer total = s.tau.sum();
  // tau sends i*infinity to 0 and 0 to 1, and A^r fixes both cusps downstairs.
  return {total, -total, 0};
}

bool is_cycle(const CurveParams& p, const SymbolCombination& s) {
  return boundary(p, s).is_zero();
}

IntVector rho_coordinates(const CurveParams& p, const SymbolCombination& s) {
  if (!is_cycle(p, s)) {
    std::ostringstream msg;
    const CuspDivisor d = boundary(p, s);
    msg << "symbol combination has boundary (" << d.cusp_0 << ", " << d.cusp_1 << ", "
        << d.cusp_infinity << ")";
    throw NotACycleError(msg.str());
  }
  // sum_{r>=1} a_r rho_r = sum_{r>=1} a_r [A^r tau] - (sum_{r>=1} a_r) [tau]
  return s.tau.tail(p.n() - 1);
}

H1Class rho_to_E(const CurveParams& p, const SymbolCombination& s) {
  return H1Class(p.n(), rho_coordinates(p, s));
}

SymbolCombination shift_symbols(const CurveParams& p, const SymbolCombination& s, Integer m) {
  SymbolCombination out = SymbolCombination::zero(p);
  for (Integer r = 0; r < p.n(); ++r) {
    out.tau(mod(r + m, p.n())) = s.tau(r);
    out.plain(mod(r + m, p.n())) = s.plain(r);
  }
  return out;
}

Integer cycle_rank(const CurveParams& p) {
  IntMatrix basis(p.n(), p.n() - 1);
  for (Integer r = 1; r < p.n(); ++r) basis.col(r - 1) = SymbolCombination::rho(p, r).tau;
  return static_cast<Integer>(bareiss_rank(basis));
}

}  // namespace belyi
