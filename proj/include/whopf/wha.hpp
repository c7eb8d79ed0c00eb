#pragma once

// The word Hopf algebra: arbitrary words over the positive integers, carried
// into the double word Hopf algebra by the run encoding.

#include <stdexcept>
#include <vector>

#include "whopf/dwha.hpp"
#include "whopf/hopf_core.hpp"
#include "whopf/words.hpp"

namespace whopf {

struct NotWHAForm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Equal letters of the top word are contiguous.
bool is_wha_form(const Substitution& s);

/// With supp(a) = {a1 < ... < an}: top = 1^{r1} 2^{r2} ... n^{rn} where
/// r1 = a1, ri = ai - a(i-1); bottom = a with value ai replaced by i.
Substitution encode(const Word& a);
/// Inverse of encode. Throws NotWHAForm.
Word decode(const Substitution& s);

/// a shuffled with b shifted by height(a).
LinComb<Word> wha_product(const Word& a, const Word& b);
/// (decode (x) decode) o mu_dWHA o encode.
LinComb<Tensor2<Word>> wha_coproduct(const Word& a);

/// Words of length <= max_len over letters 1..max_height.
std::vector<Word> words_up_to(std::size_t max_len, Letter max_height);

/// Graded by #supp.
HopfStructure<Word> wha_hopf();

}  // namespace whopf
