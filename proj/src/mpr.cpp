#include "whopf/mpr.hpp"

#include <algorithm>
#include <numeric>

namespace whopf {

LinComb<PermWord> mpr_product(const PermWord& a, const PermWord& b) {
  LinComb<PermWord> out;
  for (const auto& [w, c] :
       shuffle(a.word(), shift(b.word(), static_cast<Letter>(a.size())))) {
    out.add(PermWord(w), c);
  }
  return out;
}

LinComb<Tensor2<PermWord>> mpr_coproduct(const PermWord& a) {
  LinComb<Tensor2<PermWord>> out;
  for (const auto& [l, r] : cuts(a.word())) {
    out.add(Tensor2<PermWord>{standardize(l), standardize(r)}, 1);
  }
  return out;
}

PermWord mpr_inverse(const PermWord& a) {
  std::vector<Letter> inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    inv[a[i] - 1] = static_cast<Letter>(i + 1);
  }
  return PermWord(Word(std::move(inv)));
}

Coeff mpr_pair(const PermWord& a, const PermWord& b) {
  return Coeff(b == mpr_inverse(a) ? 1 : 0);
}

LinComb<PermWord> mpr_compose(const PermWord& a, const PermWord& b) {
  if (a.size() != b.size()) {
    return {};
  }
  std::vector<Letter> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[b[i] - 1];
  }
  return LinComb<PermWord>(PermWord(Word(std::move(out))));
}

std::vector<PermWord> permutations_of(std::size_t len) {
  std::vector<Letter> v(len);
  std::iota(v.begin(), v.end(), Letter{1});
  std::vector<PermWord> out;
  do {
    out.emplace_back(Word(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<PermWord> permutations_up_to(std::size_t max_len) {
  std::vector<PermWord> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    auto layer = permutations_of(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

HopfStructure<PermWord> mpr_hopf() {
  HopfStructure<PermWord> h;
  h.name = "mpr";
  h.product = mpr_product;
  h.coproduct = mpr_coproduct;
  h.unit = LinComb<PermWord>(PermWord{});
  h.counit = [](const PermWord& p) { return Coeff(p.size() == 0 ? 1 : 0); };
  h.degree = [](const PermWord& p) { return p.size(); };
  h.format = [](const PermWord& p) {
    return p.size() == 0 ? std::string("1") : to_string(p);
  };
  return h;
}

PairingStructure<PermWord> mpr_pairing() {
  return {mpr_pair, mpr_inverse};
}

}  // namespace whopf
