#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "whopf/lincomb.hpp"

namespace whopf {

using Letter = std::uint32_t;
using LetterSet = std::set<Letter>;

/// Finite sequence of positive integers. The empty word is the monoid unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// A word whose letters are exactly 1..m, each once; encodes i -> w_i.
class PermWord {
 public:
  PermWord() = default;
  /// Throws NotAPermutation.
  explicit PermWord(Word w);

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  Letter operator[](std::size_t i) const { return word_[i]; }

  static PermWord identity(std::size_t n);

  friend auto operator<=>(const PermWord&, const PermWord&) = default;
  friend bool operator==(const PermWord&, const PermWord&) = default;

 private:
  Word word_;
};

struct RepeatedLetters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Cut = std::pair<Word, Word>;

Word concat(const Word& v, const Word& w);
LinComb<Word> shuffle(const Word& a, const Word& b);
std::vector<Cut> cuts(const Word& w);
/// Cuts whose two halves have disjoint supports; the trivial cuts are always
/// among them.
std::vector<Cut> good_cuts(const Word& w);
LetterSet support(const Word& w);
/// Largest letter; 0 for the empty word.
Letter height(const Word& w);
/// Order-preserving relabeling onto 1..lg(w). Throws RepeatedLetters.
PermWord standardize(const Word& w);
bool is_permutation(const Word& w);
bool has_repeats(const Word& w);
/// True iff lg(w) = lg(pattern) and every equality forced by the pattern
/// (pattern_i = pattern_j) also holds in w. Extra equalities in w are allowed.
bool matches(const Word& w, const Word& pattern);
/// Subword of the positions whose letter lies in s.
Word restrict(const Word& w, const LetterSet& s);
Word shift(const Word& w, Letter k);
Word reverse(const Word& w);

std::string to_string(const Word& w);
std::string to_string(const PermWord& w);

}  // namespace whopf
