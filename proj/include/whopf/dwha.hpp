#pragma once

// The double word Hopf algebra. Basis: substitutions, i.e. pairs of words
// (top / bottom) with equal support, up to bijective relabeling of letters.

#include <stdexcept>
#include <string>
#include <vector>

#include "whopf/hopf_core.hpp"
#include "whopf/words.hpp"

namespace whopf {

struct SupportMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Canonical representative of a substitution: the support is {1..k} and
/// letters are numbered in order of first occurrence in the top word. Only
/// canonicalize() constructs one, so two Substitution values are equal iff
/// they denote the same basis element.
class Substitution {
 public:
  /// The empty substitution [] / [], the unit of the algebra.
  Substitution() = default;

  const Word& top() const { return top_; }
  const Word& bottom() const { return bottom_; }
  /// #supp(top)
  std::size_t degree() const { return degree_; }
  bool empty() const { return top_.empty(); }

  friend Substitution canonicalize(const Word& top, const Word& bottom);

  friend auto operator<=>(const Substitution& a, const Substitution& b) {
    if (auto c = a.top_ <=> b.top_; c != 0) {
      return c;
    }
    return a.bottom_ <=> b.bottom_;
  }
  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_;
  }

 private:
  Substitution(Word top, Word bottom, std::size_t degree)
      : top_(std::move(top)), bottom_(std::move(bottom)), degree_(degree) {}

  Word top_;
  Word bottom_;
  std::size_t degree_ = 0;
};

/// Relabels letters 1..k by first occurrence in top. Throws SupportMismatch.
Substitution canonicalize(const Word& top, const Word& bottom);

std::string to_string(const Substitution& p);

/// Relabels q away from p, concatenates tops and shuffles bottoms.
LinComb<Substitution> dwha_product(const Substitution& p, const Substitution& q);
/// Sum over good cuts (s1, s2) of the bottom word of
/// (top restricted to supp s1) / s1  (x)  (top restricted to supp s2) / s2.
LinComb<Tensor2<Substitution>> dwha_coproduct(const Substitution& p);
/// The substitution with top and bottom exchanged.
Substitution dwha_dual(const Substitution& p);
/// 1 iff q is the exchange of p up to relabeling.
Coeff dwha_pair(const Substitution& p, const Substitution& q);

/// All canonical substitutions with #supp <= max_support, lg(top) <=
/// max_top and lg(bottom) <= max_bottom, the empty one included. Ordered by
/// degree, then top, then bottom.
std::vector<Substitution> enumerate_substitutions(std::size_t max_support,
                                                  std::size_t max_top,
                                                  std::size_t max_bottom);

/// [1..n] / t
Substitution embed(const PermWord& t);
/// embed(st(t)) for a word without repeats. Throws RepeatedLetters.
Substitution embed_distinct(const Word& t);
/// The substitution acting as alpha -> p(q(alpha)); zero when
/// lg(bottom q) != lg(top p).
LinComb<Substitution> subst_compose(const Substitution& p, const Substitution& q);

HopfStructure<Substitution> dwha_hopf();
PairingStructure<Substitution> dwha_pairing();

}  // namespace whopf
