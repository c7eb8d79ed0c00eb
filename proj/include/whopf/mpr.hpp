#pragma once

// The Hopf algebra of permutations: shifted-shuffle product, standardized-cut
// coproduct, the inverse pairing and composition.

#include <vector>

#include "whopf/hopf_core.hpp"
#include "whopf/words.hpp"

namespace whopf {

/// a shuffled with b shifted by lg(a).
LinComb<PermWord> mpr_product(const PermWord& a, const PermWord& b);
/// sum over cuts of st(prefix) (x) st(suffix).
LinComb<Tensor2<PermWord>> mpr_coproduct(const PermWord& a);
PermWord mpr_inverse(const PermWord& a);
/// 1 iff b is the inverse of a.
Coeff mpr_pair(const PermWord& a, const PermWord& b);
/// (a o b)(i) = a(b(i)) for equal lengths, zero otherwise.
LinComb<PermWord> mpr_compose(const PermWord& a, const PermWord& b);

/// All permutations of length <= max_len, by length then lexicographically.
std::vector<PermWord> permutations_up_to(std::size_t max_len);
std::vector<PermWord> permutations_of(std::size_t len);

HopfStructure<PermWord> mpr_hopf();
PairingStructure<PermWord> mpr_pairing();

}  // namespace whopf
