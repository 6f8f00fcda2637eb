#include "belyi/words.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace belyi {

Word::Word(Integer n, std::vector<Letter> letters) : n_(n) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push_back(l);
}

void Word::push_back(Letter l) {
  if (l.sign != 1 && l.sign != -1) {
    throw RangeError("letter sign must be +1 or -1");
  }
  letters_.push_back({mod(l.index, n_), l.sign});
}

Word& Word::operator*=(const Word& o) {
  if (o.n_ != n_) throw RangeError("cannot concatenate words over different generator sets");
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

Word Word::inverse() const {
  Word out(n_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

IntVector Word::exponent_sums() const {
  IntVector sums = IntVector::Zero(n_);
  for (const Letter& l : letters_) sums(l.index) += l.sign;
  return sums;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << "·";
    os << "E_" << l.index;
    if (l.sign < 0) os << "^-1";
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(w.n(), std::move(stack));
}

Word strip_placeholders(const Word& w) {
  Word out(w.n());
  for (const Letter& l : w.letters()) {
    if (l.index != 0) out.push_back(l);
  }
  return out;
}

std::vector<Letter> between(const Word& w, Residue i) {
  if (i.modulus() != w.n()) throw RangeError("generator index has the wrong modulus");
  const auto& letters = w.letters();
  const Letter fwd{i.value(), 1};
  const Letter inv{i.value(), -1};
  const auto count_fwd = std::count(letters.begin(), letters.end(), fwd);
  const auto count_inv = std::count(letters.begin(), letters.end(), inv);
  if (count_fwd != 1 || count_inv != 1) {
    std::ostringstream msg;
    msg << "E_" << i.value() << " occurs " << count_fwd << " time(s) and E_" << i.value()
        << "^-1 occurs " << count_inv << " time(s); expected exactly one each";
    throw MultiplicityError(msg.str());
  }
  const auto size = letters.size();
  const auto start = static_cast<std::size_t>(std::find(letters.begin(), letters.end(), inv) - letters.begin());
  std::vector<Letter> out;
  for (std::size_t step = 1; step < size; ++step) {
    const Letter& l = letters[(start + step) % size];
    if (l == fwd) break;
    out.push_back(l);
  }
  return out;
}

DegreeTwoExpansion magnus_expansion(const Word& w) {
  const Integer rank = w.n() - 1;
  DegreeTwoExpansion e{IntVector::Zero(rank), IntMatrix::Zero(rank, rank)};
  // (1 + l + Q)(1 + s X + [s<0] X^2) truncated at degree 2
  for (const Letter& l : w.letters()) {
    if (l.index == 0) continue;
    const Eigen::Index x = l.index - 1;
    e.quadratic.col(x) += l.sign * e.linear;
    if (l.sign < 0) e.quadratic(x, x) += 1;
    e.linear(x) += l.sign;
  }
  return e;
}

WedgeClass magnus_class(const Word& w) {
  const DegreeTwoExpansion e = magnus_expansion(w);
  if (!e.linear.isZero()) {
    std::ostringstream msg;
    msg << "word is not in the commutator subgroup; exponent sums over E_1..E_" << w.n() - 1
        << " are (" << e.linear.transpose() << ")";
    throw NotACommutatorError(msg.str());
  }
  return WedgeClass::from_matrix(w.n(), e.quadratic);
}

WedgeClass ordering_rule_class(const Word& w) {
  WedgeClass out(w.n());
  for (Integer i = 1; i < w.n(); ++i) {
    for (const Letter& l : between(w, Residue{i, w.n()})) {
      if (l.index > i) out.add(i, l.index, -l.sign);
    }
  }
  return out;
}

}  // namespace belyi
