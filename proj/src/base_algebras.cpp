#include "whopf/base_algebras.hpp"

#include <map>
#include <numeric>

namespace whopf {

namespace {

void compositions_of(std::size_t n, std::vector<Letter>& prefix,
                     std::vector<Word>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::size_t first = 1; first <= n; ++first) {
    prefix.push_back(static_cast<Letter>(first));
    compositions_of(n - first, prefix, out);
    prefix.pop_back();
  }
}

std::string unit_or(const Word& w, const std::string& s) {
  return w.empty() ? "1" : s;
}

}  // namespace

LinComb<Word> shuffle_product(const Word& a, const Word& b) {
  return shuffle(a, b);
}

LinComb<Tensor2<Word>> shuffle_coproduct(const Word& a) {
  LinComb<Tensor2<Word>> out;
  for (auto& [l, r] : cuts(a)) {
    out.add(Tensor2<Word>{std::move(l), std::move(r)}, 1);
  }
  return out;
}

LinComb<Word> shuffle_antipode(const Word& a) {
  return LinComb<Word>(reverse(a), a.size() % 2 == 0 ? 1 : -1);
}

std::size_t weight(const Word& a) {
  return std::accumulate(a.begin(), a.end(), std::size_t{0});
}

std::vector<Word> compositions_up_to(std::size_t max_weight) {
  std::vector<Word> out;
  std::vector<Letter> prefix;
  for (std::size_t n = 0; n <= max_weight; ++n) {
    compositions_of(n, prefix, out);
  }
  return out;
}

HopfStructure<Word> shuffle_hopf() {
  HopfStructure<Word> h;
  h.name = "shuffle";
  h.product = shuffle_product;
  h.coproduct = shuffle_coproduct;
  h.unit = LinComb<Word>(Word{});
  h.counit = [](const Word& w) { return Coeff(w.empty() ? 1 : 0); };
  h.degree = weight;
  h.format = [](const Word& w) { return unit_or(w, to_string(w)); };
  return h;
}

std::string to_string(const NSymmMonomial& z) {
  return "Z" + to_string(z.indices);
}

LinComb<NSymmMonomial> nsymm_product(const NSymmMonomial& a,
                                     const NSymmMonomial& b) {
  return LinComb<NSymmMonomial>(NSymmMonomial{concat(a.indices, b.indices)});
}

LinComb<Tensor2<NSymmMonomial>> nsymm_coproduct(const NSymmMonomial& a) {
  // Multiply out prod_k mu(Z_{i_k}) in the tensor-square algebra; each
  // factor Z_i (x) Z_{n-i} appends i to the left and n-i to the right
  // composition, dropping zeros.
  using T = Tensor2<std::vector<Letter>>;
  std::map<T, Coeff> acc{{T{{}, {}}, Coeff(1)}};
  for (Letter n : a.indices) {
    std::map<T, Coeff> next;
    for (const auto& [t, c] : acc) {
      for (Letter i = 0; i <= n; ++i) {
        T u = t;
        if (i > 0) {
          u.left.push_back(i);
        }
        if (n - i > 0) {
          u.right.push_back(n - i);
        }
        next[u] += c;
      }
    }
    acc = std::move(next);
  }
  LinComb<Tensor2<NSymmMonomial>> out;
  for (const auto& [t, c] : acc) {
    out.add(Tensor2<NSymmMonomial>{NSymmMonomial{Word(t.left)},
                                   NSymmMonomial{Word(t.right)}},
            c);
  }
  return out;
}

std::vector<NSymmMonomial> nsymm_monomials_up_to(std::size_t max_weight) {
  std::vector<NSymmMonomial> out;
  for (auto& w : compositions_up_to(max_weight)) {
    out.push_back(NSymmMonomial{std::move(w)});
  }
  return out;
}

HopfStructure<NSymmMonomial> nsymm_hopf() {
  HopfStructure<NSymmMonomial> h;
  h.name = "nsymm";
  h.product = nsymm_product;
  h.coproduct = nsymm_coproduct;
  h.unit = LinComb<NSymmMonomial>(NSymmMonomial{});
  h.counit = [](const NSymmMonomial& z) {
    return Coeff(z.indices.empty() ? 1 : 0);
  };
  h.degree = [](const NSymmMonomial& z) { return weight(z.indices); };
  h.format = [](const NSymmMonomial& z) {
    return z.indices.empty() ? std::string("1") : to_string(z);
  };
  return h;
}

}  // namespace whopf
