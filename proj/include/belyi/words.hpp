#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "belyi/wedge.hpp"

namespace belyi {

/// Generator E_index raised to sign (+1 or -1).
struct Letter {
  Integer index;
  int sign;

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the free group on E_0, ..., E_{n-1}. Letters compose left to right,
/// the same order in which paths are concatenated.
class Word {
 public:
  explicit Word(Integer n) : n_(n) {}
  /// Letter indices are reduced mod n; signs must be +1 or -1.
  Word(Integer n, std::vector<Letter> letters);

  Integer n() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(Letter l);
  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word inverse() const;
  /// Exponent sum of each generator, indexed 0..n-1.
  IntVector exponent_sums() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Integer n_;
  std::vector<Letter> letters_;
};

/// Text form with `E_i` / `E_i^-1` tokens joined by a middle dot.
std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

Word free_reduce(const Word& w);

/// Drops every E_0^{+-1}; E_0 = e_0^{-1} e_0 is the trivial loop.
Word strip_placeholders(const Word& w);

/// Letters strictly between E_i^{-1} and E_i once the word is rotated so that
/// E_i^{-1} comes first. Throws MultiplicityError unless each of E_i and
/// E_i^{-1} occurs exactly once.
std::vector<Letter> between(const Word& w, Residue i);

/// Truncated Magnus expansion 1 + linear + quadratic of a word, over the
/// generators E_1..E_{n-1} (E_0 is sent to 1). `quadratic(I-1, J-1)` is the
/// coefficient of X_I X_J.
struct DegreeTwoExpansion {
  IntVector linear;
  IntMatrix quadratic;
};

DegreeTwoExpansion magnus_expansion(const Word& w);

/// Class of a commutator-subgroup word in the exterior square of H_1, read off
/// the antisymmetric quadratic part of its Magnus expansion. Throws
/// NotACommutatorError if some exponent sum (ignoring E_0) is nonzero.
WedgeClass magnus_class(const Word& w);

/// Class of a word by the ordering rule: for each i >= 1 and each letter
/// E_J^{s} with J > i lying between E_i^{-1} and E_i, contributes
/// -s [E_i]^[E_J]. Requires every nonzero generator to occur exactly once with
/// each sign.
WedgeClass ordering_rule_class(const Word& w);

}  // namespace belyi
