#include "whopf/wha.hpp"

#include <map>

namespace whopf {

bool is_wha_form(const Substitution& s) {
  const Word& t = s.top();
  LetterSet closed;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0 && t[i] != t[i - 1]) {
      closed.insert(t[i - 1]);
    }
    if (closed.count(t[i])) {
      return false;
    }
  }
  return true;
}

Substitution encode(const Word& a) {
  const LetterSet supp = support(a);
  std::map<Letter, Letter> rank;
  std::vector<Letter> top;
  Letter previous = 0;
  for (Letter v : supp) {
    const auto i = static_cast<Letter>(rank.size() + 1);
    rank.emplace(v, i);
    top.insert(top.end(), v - previous, i);
    previous = v;
  }
  std::vector<Letter> bottom;
  bottom.reserve(a.size());
  for (Letter v : a) {
    bottom.push_back(rank.at(v));
  }
  return canonicalize(Word(std::move(top)), Word(std::move(bottom)));
}

Word decode(const Substitution& s) {
  if (!is_wha_form(s)) {
    throw NotWHAForm("top word is not a sequence of runs: " + to_string(s));
  }
  // In canonical form the runs appear as 1^{r1} 2^{r2} ..., so the partial
  // sum r1 + ... + ri is the position of the last occurrence of letter i.
  std::map<Letter, Letter> partial;
  for (std::size_t i = 0; i < s.top().size(); ++i) {
    partial[s.top()[i]] = static_cast<Letter>(i + 1);
  }
  std::vector<Letter> out;
  out.reserve(s.bottom().size());
  for (Letter b : s.bottom()) {
    out.push_back(partial.at(b));
  }
  return Word(std::move(out));
}

LinComb<Word> wha_product(const Word& a, const Word& b) {
  return shuffle(a, shift(b, height(a)));
}

LinComb<Tensor2<Word>> wha_coproduct(const Word& a) {
  LinComb<Tensor2<Word>> out;
  for (const auto& [t, c] : dwha_coproduct(encode(a))) {
    out.add(Tensor2<Word>{decode(t.left), decode(t.right)}, c);
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t max_len, Letter max_height) {
  std::vector<Word> out{Word{}};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (Letter a = 1; a <= max_height; ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    }
    for (const auto& w : next) {
      out.emplace_back(w);
    }
    layer = std::move(next);
  }
  return out;
}

HopfStructure<Word> wha_hopf() {
  HopfStructure<Word> h;
  h.name = "wha";
  h.product = wha_product;
  h.coproduct = wha_coproduct;
  h.unit = LinComb<Word>(Word{});
  h.counit = [](const Word& w) { return Coeff(w.empty() ? 1 : 0); };
  h.degree = [](const Word& w) { return support(w).size(); };
  h.format = [](const Word& w) {
    return w.empty() ? std::string("1") : to_string(w);
  };
  return h;
}

}  // namespace whopf
