#include "belyi/wedge.hpp"

#include <ostream>

namespace belyi {

H1Class::H1Class(Integer n) : n_(n), coords_(IntVector::Zero(n - 1)) {}

H1Class::H1Class(Integer n, IntVector coords) : n_(n), coords_(std::move(coords)) {
  if (coords_.size() != n - 1) {
    throw RangeError("H1Class needs " + std::to_string(n - 1) + " coordinates");
  }
}

H1Class H1Class::basis(Integer n, Integer i) {
  H1Class v(n);
  const Integer r = mod(i, n);
  if (r != 0) {
    v.coords_(r - 1) = 1;
  }
  return v;
}

Integer H1Class::operator[](Integer i) const {
  const Integer r = mod(i, n_);
  return r == 0 ? 0 : coords_(r - 1);
}

H1Class& H1Class::operator+=(const H1Class& o) {
  if (o.n_ != n_) throw RangeError("H1Class rank mismatch");
  coords_ += o.coords_;
  return *this;
}

H1Class& H1Class::operator-=(const H1Class& o) {
  if (o.n_ != n_) throw RangeError("H1Class rank mismatch");
  coords_ -= o.coords_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const H1Class& v) {
  bool first = true;
  for (Integer i = 1; i < v.n(); ++i) {
    const Integer a = v[i];
    if (a == 0) continue;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    const Integer m = a < 0 ? -a : a;
    if (m != 1) os << m;
    os << "[E_" << i << "]";
    first = false;
  }
  if (first) os << "0";
  return os;
}

WedgeClass::WedgeClass(Integer n) : n_(n) {}

void WedgeClass::add(Integer i, Integer j, Integer coeff) {
  i = mod(i, n_);
  j = mod(j, n_);
  if (coeff == 0 || i == 0 || j == 0 || i == j) return;
  if (i > j) {
    std::swap(i, j);
    coeff = -coeff;
  }
  auto [it, inserted] = terms_.try_emplace(Key{i, j}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer WedgeClass::coefficient(Integer i, Integer j) const {
  i = mod(i, n_);
  j = mod(j, n_);
  if (i == 0 || j == 0 || i == j) return 0;
  const Integer sign = i < j ? 1 : -1;
  const auto it = terms_.find(i < j ? Key{i, j} : Key{j, i});
  return it == terms_.end() ? 0 : sign * it->second;
}

IntMatrix WedgeClass::to_matrix() const {
  IntMatrix m = IntMatrix::Zero(n_ - 1, n_ - 1);
  for (const auto& [key, coeff] : terms_) {
    m(key.first - 1, key.second - 1) = coeff;
    m(key.second - 1, key.first - 1) = -coeff;
  }
  return m;
}

WedgeClass WedgeClass::from_matrix(Integer n, const IntMatrix& m) {
  if (m.rows() != n - 1 || m.cols() != n - 1) {
    throw RangeError("Gram matrix must be (n-1)x(n-1)");
  }
  WedgeClass w(n);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = r + 1; c < m.cols(); ++c) {
      w.add(r + 1, c + 1, m(r, c));
    }
  }
  return w;
}

WedgeClass& WedgeClass::operator+=(const WedgeClass& o) {
  if (o.n_ != n_) throw RangeError("WedgeClass rank mismatch");
  for (const auto& [key, coeff] : o.terms_) add(key.first, key.second, coeff);
  return *this;
}

WedgeClass& WedgeClass::operator-=(const WedgeClass& o) {
  if (o.n_ != n_) throw RangeError("WedgeClass rank mismatch");
  for (const auto& [key, coeff] : o.terms_) add(key.first, key.second, -coeff);
  return *this;
}

WedgeClass& WedgeClass::operator*=(Integer s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= s;
  return *this;
}

WedgeClass wedge(const H1Class& a, const H1Class& b) {
  if (a.n() != b.n()) throw RangeError("wedge of classes with different n");
  WedgeClass w(a.n());
  for (Integer i = 1; i < a.n(); ++i) {
    if (a[i] == 0) continue;
    for (Integer j = 1; j < b.n(); ++j) {
      w.add(i, j, a[i] * b[j]);
    }
  }
  return w;
}

std::ostream& operator<<(std::ostream& os, const WedgeClass& w) {
  bool first = true;
  for (const auto& [key, a] : w.terms()) {
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    const Integer m = a < 0 ? -a : a;
    if (m != 1) os << m;
    os << "[E_" << key.first << "]^[E_" << key.second << "]";
    first = false;
  }
  if (first) os << "0";
  return os;
}

}  // namespace belyi
