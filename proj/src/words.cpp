#include "whopf/words.hpp"

#include <algorithm>
#include <map>

namespace whopf {

namespace {

void check_letters(const std::vector<Letter>& letters) {
  for (Letter a : letters) {
    if (a == 0) {
      throw std::invalid_argument("word letters must be positive integers");
    }
  }
}

// Appends every interleaving of a[i..] and b[j..] onto prefix.
void interleave(const Word& a, std::size_t i, const Word& b, std::size_t j,
                std::vector<Letter>& prefix, LinComb<Word>& out) {
  if (i == a.size() && j == b.size()) {
    out.add(Word(prefix), 1);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    interleave(a, i + 1, b, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    interleave(a, i, b, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
  check_letters(letters_);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  check_letters(letters_);
}

PermWord::PermWord(Word w) : word_(std::move(w)) {
  if (!is_permutation(word_)) {
    throw NotAPermutation("not a permutation word: " + to_string(word_));
  }
}

PermWord PermWord::identity(std::size_t n) {
  std::vector<Letter> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Letter>(i + 1);
  }
  return PermWord(Word(std::move(v)));
}

Word concat(const Word& v, const Word& w) {
  std::vector<Letter> out = v.letters();
  out.insert(out.end(), w.begin(), w.end());
  return Word(std::move(out));
}

LinComb<Word> shuffle(const Word& a, const Word& b) {
  LinComb<Word> out;
  std::vector<Letter> prefix;
  prefix.reserve(a.size() + b.size());
  interleave(a, 0, b, 0, prefix, out);
  return out;
}

std::vector<Cut> cuts(const Word& w) {
  std::vector<Cut> out;
  out.reserve(w.size() + 1);
  const auto& l = w.letters();
  for (std::size_t i = 0; i <= l.size(); ++i) {
    out.emplace_back(Word(std::vector<Letter>(l.begin(), l.begin() + i)),
                     Word(std::vector<Letter>(l.begin() + i, l.end())));
  }
  return out;
}

std::vector<Cut> good_cuts(const Word& w) {
  // A cut after position i is good iff no letter occurs both at or before i
  // and after i, i.e. every letter seen so far has had its last occurrence.
  std::map<Letter, std::size_t> last;
  for (std::size_t i = 0; i < w.size(); ++i) {
    last[w[i]] = i;
  }
  std::vector<Cut> out;
  std::size_t reach = 0;  // one past the furthest last-occurrence seen
  const auto& l = w.letters();
  for (std::size_t i = 0; i <= l.size(); ++i) {
    if (reach <= i) {
      out.emplace_back(Word(std::vector<Letter>(l.begin(), l.begin() + i)),
                       Word(std::vector<Letter>(l.begin() + i, l.end())));
    }
    if (i < l.size()) {
      reach = std::max(reach, last[l[i]] + 1);
    }
  }
  return out;
}

LetterSet support(const Word& w) { return LetterSet(w.begin(), w.end()); }

Letter height(const Word& w) {
  Letter h = 0;
  for (Letter a : w) {
    h = std::max(h, a);
  }
  return h;
}

bool has_repeats(const Word& w) { return support(w).size() != w.size(); }

bool is_permutation(const Word& w) {
  return !has_repeats(w) && height(w) == w.size();
}

PermWord standardize(const Word& w) {
  if (has_repeats(w)) {
    throw RepeatedLetters("standardize needs a word without repeats: " +
                          to_string(w));
  }
  std::vector<Letter> sorted = w.letters();
  std::sort(sorted.begin(), sorted.end());
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter a : w) {
    auto pos = std::lower_bound(sorted.begin(), sorted.end(), a);
    out.push_back(static_cast<Letter>(pos - sorted.begin() + 1));
  }
  return PermWord(Word(std::move(out)));
}

bool matches(const Word& w, const Word& pattern) {
  if (w.size() != pattern.size()) {
    return false;
  }
  std::map<Letter, Letter> assigned;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [it, inserted] = assigned.try_emplace(pattern[i], w[i]);
    if (!inserted && it->second != w[i]) {
      return false;
    }
  }
  return true;
}

Word restrict(const Word& w, const LetterSet& s) {
  std::vector<Letter> out;
  for (Letter a : w) {
    if (s.count(a)) {
      out.push_back(a);
    }
  }
  return Word(std::move(out));
}

Word shift(const Word& w, Letter k) {
  std::vector<Letter> out = w.letters();
  for (Letter& a : out) {
    a += k;
  }
  return Word(std::move(out));
}

Word reverse(const Word& w) {
  return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

std::string to_string(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) {
      out += ",";
    }
    out += std::to_string(w[i]);
  }
  return out + "]";
}

std::string to_string(const PermWord& w) { return to_string(w.word()); }

}  // namespace whopf
