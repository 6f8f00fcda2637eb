#include "belyi/homology.hpp"

#include <sstream>

#include "belyi/determinant.hpp"

namespace belyi {

InertiaType::InertiaType(Integer n, Integer a, Integer b, Integer c)
    : n_(n), components_{Residue{a, n}, Residue{b, n}, Residue{c, n}} {
  const Residue sum = components_[0] + components_[1] + components_[2];
  if (sum.value() != 0) {
    std::ostringstream msg;
    msg << "inertia type (" << a << ", " << b << ", " << c << ") does not sum to 0 mod " << n;
    throw UnsupportedInertiaError(msg.str());
  }
  for (const Residue& r : components_) {
    if (gcd(r.value(), n) != 1) {
      std::ostringstream msg;
      msg << "inertia component " << r.value() << " shares the factor " << gcd(r.value(), n)
          << " with n = " << n;
      throw UnsupportedInertiaError(msg.str());
    }
  }
}

Integer plus_indicator(const CurveParams& p, Integer d) {
  const Integer x = mod(p.c() * mod(d, p.n()), p.n());
  return (x >= 1 && x <= p.c() - 1) ? 1 : 0;
}

Integer minus_indicator(const CurveParams& p, Integer d) { return plus_indicator(p, d + 1); }

WedgeClass closed_form_delta(const CurveParams& p) {
  const Integer n = p.n();
  // Coefficients depend only on d = J - I.
  std::vector<Integer> by_difference(static_cast<std::size_t>(n), 0);
  for (Integer d = 1; d < n; ++d) {
    by_difference[static_cast<std::size_t>(d)] = plus_indicator(p, d) - minus_indicator(p, d);
  }
  WedgeClass delta(n);
  for (Integer i = 1; i < n; ++i) {
    for (Integer j = i + 1; j < n; ++j) {
      delta.add(i, j, by_difference[static_cast<std::size_t>(j - i)]);
    }
  }
  return delta;
}

WedgeClass expand_T(const CurveParams& p, Integer r) {
  if (r < 1 || r > p.n() - 1) {
    throw RangeError("T_r needs 1 <= r <= " + std::to_string(p.n() - 1) + ", got " +
                     std::to_string(r));
  }
  WedgeClass t(p.n());
  for (Integer i = 0; i < p.n(); ++i) t.add(i, i + r, 1);
  return t;
}

TDecomposition t_decomposition(const CurveParams& p) {
  TDecomposition t{p.n(), {}};
  for (Integer r = 1; r <= (p.n() - 1) / 2; ++r) {
    t.coefficients.push_back(plus_indicator(p, r) - minus_indicator(p, r));
  }
  return t;
}

WedgeClass recompose(const CurveParams& p, const TDecomposition& t) {
  WedgeClass out(p.n());
  for (std::size_t r = 0; r < t.coefficients.size(); ++r) {
    if (t.coefficients[r] != 0) {
      out += t.coefficients[r] * expand_T(p, static_cast<Integer>(r) + 1);
    }
  }
  return out;
}

IntMatrix epsilon_matrix(const CurveParams& p) {
  const Integer rank = p.n() - 1;
  IntMatrix m = IntMatrix::Zero(rank, rank);
  for (Integer i = 1; i <= rank; ++i) {
    if (i + 1 <= rank) m(i, i - 1) += 1;
    m(0, i - 1) -= 1;
  }
  return m;
}

IntMatrix apply_epsilon(const CurveParams& p, const IntMatrix& x) {
  const Eigen::Index rank = p.n() - 1;
  if (x.rows() != rank) throw RangeError("apply_epsilon: row count must be n-1");
  IntMatrix y(rank, x.cols());
  y.bottomRows(rank - 1) = x.topRows(rank - 1);
  y.row(0) = -x.colwise().sum();
  return y;
}

H1Class eps_h1(const CurveParams& p, const H1Class& v) {
  return H1Class(p.n(), apply_epsilon(p, v.coords()));
}

WedgeClass eps_wedge(const CurveParams& p, const WedgeClass& w) {
  // M A M^T = (M (M A)^T)^T
  const IntMatrix left = apply_epsilon(p, w.to_matrix());
  return WedgeClass::from_matrix(p.n(), apply_epsilon(p, left.transpose()).transpose());
}

WedgeClass substitute(const CurveParams& p, const WedgeClass& w, Residue j) {
  if (gcd(j.value(), p.n()) != 1) {
    std::ostringstream msg;
    msg << "substitution factor " << j.value() << " is not coprime to n = " << p.n();
    throw NotCoprimeError(msg.str());
  }
  WedgeClass out(p.n());
  for (const auto& [key, coeff] : w.terms()) {
    out.add(j.value() * key.first, j.value() * key.second, coeff);
  }
  return out;
}

InertiaDecomposition decompose_inertia(const InertiaType& t) {
  const Integer n = t.n();
  const auto& [a, b, c] = t.components();
  const Residue k = b * a.inverse();
  if (!is_valid(n, k.value()) || c != -(a * (k + 1))) {
    std::ostringstream msg;
    msg << "inertia type (" << a.value() << ", " << b.value() << ", " << c.value()
        << ") is not of the form (j, jk, -j(k+1)) with (n, k) = (" << n << ", " << k.value()
        << ") valid";
    throw UnsupportedInertiaError(msg.str());
  }
  return {a.value(), k.value()};
}

WedgeClass general_inertia_delta(const CurveParams& p, const InertiaType& t) {
  if (t.n() != p.n()) throw RangeError("inertia type and parameters disagree on n");
  const auto [j, k] = decompose_inertia(t);
  const CurveParams standard = validate(p.n(), k);
  return substitute(standard, closed_form_delta(standard), p.residue(j).inverse());
}

H1Class fermat_image(const CurveParams& p, Residue i, Residue j) {
  const Residue jk = p.k() * j;
  return H1Class::basis(p.n(), jk.value()) - H1Class::basis(p.n(), (i + jk).value()) +
         H1Class::basis(p.n(), i.value());
}

Integer pfaffian_check(const CurveParams& p, const WedgeClass& w) {
  if (w.n() != p.n()) throw RangeError("wedge class and parameters disagree on n");
  return bareiss_determinant(w.to_matrix());
}

}  // namespace belyi
