#include "whopf/dwha.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace whopf {

namespace {

// Restricted growth strings of length len using exactly k letters.
void growth_strings(std::size_t len, std::size_t k, std::vector<Letter>& prefix,
                    Letter max_so_far, std::vector<Word>& out) {
  if (prefix.size() == len) {
    if (max_so_far == k) {
      out.emplace_back(prefix);
    }
    return;
  }
  // Not enough positions left to introduce the missing letters.
  if (k - max_so_far > len - prefix.size()) {
    return;
  }
  const Letter top = std::min<Letter>(max_so_far + 1, static_cast<Letter>(k));
  for (Letter a = 1; a <= top; ++a) {
    prefix.push_back(a);
    growth_strings(len, k, prefix, std::max(max_so_far, a), out);
    prefix.pop_back();
  }
}

// Words of length len over 1..k using every letter.
void surjective_words(std::size_t len, std::size_t k, std::vector<Letter>& prefix,
                      std::vector<Word>& out) {
  if (prefix.size() == len) {
    if (support(Word(prefix)).size() == k) {
      out.emplace_back(prefix);
    }
    return;
  }
  for (Letter a = 1; a <= k; ++a) {
    prefix.push_back(a);
    surjective_words(len, k, prefix, out);
    prefix.pop_back();
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Substitution canonicalize(const Word& top, const Word& bottom) {
  if (support(top) != support(bottom)) {
    throw SupportMismatch("top and bottom supports differ: " + to_string(top) +
                          " / " + to_string(bottom));
  }
  std::map<Letter, Letter> relabel;
  std::vector<Letter> t;
  t.reserve(top.size());
  for (Letter a : top) {
    auto [it, inserted] =
        relabel.try_emplace(a, static_cast<Letter>(relabel.size() + 1));
    t.push_back(it->second);
  }
  std::vector<Letter> b;
  b.reserve(bottom.size());
  for (Letter a : bottom) {
    b.push_back(relabel.at(a));
  }
  const std::size_t k = relabel.size();
  return Substitution(Word(std::move(t)), Word(std::move(b)), k);
}

std::string to_string(const Substitution& p) {
  return "{" + to_string(p.top()) + "/" + to_string(p.bottom()) + "}";
}

LinComb<Substitution> dwha_product(const Substitution& p, const Substitution& q) {
  const auto k = static_cast<Letter>(p.degree());
  const Word top = concat(p.top(), shift(q.top(), k));
  LinComb<Substitution> out;
  for (const auto& [w, c] : shuffle(p.bottom(), shift(q.bottom(), k))) {
    out.add(canonicalize(top, w), c);
  }
  return out;
}

LinComb<Tensor2<Substitution>> dwha_coproduct(const Substitution& p) {
  LinComb<Tensor2<Substitution>> out;
  for (const auto& [s1, s2] : good_cuts(p.bottom())) {
    out.add(Tensor2<Substitution>{canonicalize(restrict(p.top(), support(s1)), s1),
                                  canonicalize(restrict(p.top(), support(s2)), s2)},
            1);
  }
  return out;
}

Substitution dwha_dual(const Substitution& p) {
  return canonicalize(p.bottom(), p.top());
}

Coeff dwha_pair(const Substitution& p, const Substitution& q) {
  return Coeff(dwha_dual(p) == q ? 1 : 0);
}

std::vector<Substitution> enumerate_substitutions(std::size_t max_support,
                                                  std::size_t max_top,
                                                  std::size_t max_bottom) {
  std::vector<Substitution> out;
  out.emplace_back();
  std::vector<Letter> prefix;
  for (std::size_t k = 1; k <= max_support; ++k) {
    std::vector<Word> tops;
    std::vector<Word> bottoms;
    for (std::size_t len = k; len <= max_top; ++len) {
      growth_strings(len, k, prefix, 0, tops);
    }
    for (std::size_t len = k; len <= max_bottom; ++len) {
      surjective_words(len, k, prefix, bottoms);
    }
    for (const Word& t : tops) {
      for (const Word& b : bottoms) {
        out.push_back(canonicalize(t, b));
      }
    }
  }
  return out;
}

Substitution embed(const PermWord& t) {
  return canonicalize(PermWord::identity(t.size()).word(), t.word());
}

Substitution embed_distinct(const Word& t) { return embed(standardize(t)); }

LinComb<Substitution> subst_compose(const Substitution& p, const Substitution& q) {
  const Word& pt = p.top();
  const Word& qb = q.bottom();
  if (qb.size() != pt.size()) {
    return {};
  }
  // q's letters are 1..k; letters of q's bottom that p's top forces equal
  // merge into one letter of the composite, named by its class root.
  UnionFind uf(q.degree() + 1);
  std::map<Letter, std::size_t> first_pos;
  for (std::size_t i = 0; i < pt.size(); ++i) {
    auto [it, inserted] = first_pos.try_emplace(pt[i], i);
    if (!inserted) {
      uf.unite(qb[i], qb[it->second]);
    }
  }
  auto cls = [&](Letter a) { return static_cast<Letter>(uf.find(a)); };
  std::vector<Letter> top;
  top.reserve(q.top().size());
  for (Letter a : q.top()) {
    top.push_back(cls(a));
  }
  std::vector<Letter> bottom;
  bottom.reserve(p.bottom().size());
  for (Letter a : p.bottom()) {
    bottom.push_back(cls(qb[first_pos.at(a)]));
  }
  return LinComb<Substitution>(
      canonicalize(Word(std::move(top)), Word(std::move(bottom))));
}

HopfStructure<Substitution> dwha_hopf() {
  HopfStructure<Substitution> h;
  h.name = "dwha";
  h.product = dwha_product;
  h.coproduct = dwha_coproduct;
  h.unit = LinComb<Substitution>(Substitution{});
  h.counit = [](const Substitution& p) { return Coeff(p.empty() ? 1 : 0); };
  h.degree = [](const Substitution& p) { return p.degree(); };
  h.format = [](const Substitution& p) {
    return p.empty() ? std::string("1") : to_string(p);
  };
  return h;
}

PairingStructure<Substitution> dwha_pairing() {
  return {dwha_pair, dwha_dual};
}

}  // namespace whopf
