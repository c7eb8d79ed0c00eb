#pragma once

// The shuffle Hopf algebra on words and the Hopf algebra of noncommutative
// symmetric functions on Z-monomials.

#include <string>
#include <vector>

#include "whopf/hopf_core.hpp"
#include "whopf/words.hpp"

namespace whopf {

// ---- Shuffle: basis = words, degree = sum of letters ----

LinComb<Word> shuffle_product(const Word& a, const Word& b);
/// Sum over all cuts prefix (x) suffix.
LinComb<Tensor2<Word>> shuffle_coproduct(const Word& a);
/// (-1)^lg(a) times the reversed word.
LinComb<Word> shuffle_antipode(const Word& a);
std::size_t weight(const Word& a);

/// Words (compositions) of letter sum at most max_weight, by weight.
std::vector<Word> compositions_up_to(std::size_t max_weight);

HopfStructure<Word> shuffle_hopf();

// ---- NSymm: basis = monomials Z_{i1}...Z_{im} ----

/// The monomial Z_{i1} Z_{i2} ... Z_{im}; the empty composition is 1.
struct NSymmMonomial {
  Word indices;

  friend auto operator<=>(const NSymmMonomial&, const NSymmMonomial&) = default;
  friend bool operator==(const NSymmMonomial&, const NSymmMonomial&) = default;
};

std::string to_string(const NSymmMonomial& z);

LinComb<NSymmMonomial> nsymm_product(const NSymmMonomial& a,
                                     const NSymmMonomial& b);
/// Algebra-morphism extension of mu(Z_n) = sum_{i+j=n} Z_i (x) Z_j, Z_0 = 1.
LinComb<Tensor2<NSymmMonomial>> nsymm_coproduct(const NSymmMonomial& a);
std::vector<NSymmMonomial> nsymm_monomials_up_to(std::size_t max_weight);

HopfStructure<NSymmMonomial> nsymm_hopf();

}  // namespace whopf
