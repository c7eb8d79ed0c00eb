#pragma once

// Text syntax for elements and tensors:
//
//   expr   := '0' | ['-'] term (('+' | '-') term)*
//   term   := [int '*'] factor ('(x)' factor)* | int
//   factor := '1' | word | 'Z' word | '{' word '/' word '}'
//   word   := '[' [int (',' int)*] ']'
//
// A bare integer k is k times the unit.

#include <stdexcept>
#include <string>
#include <vector>

#include "whopf/base_algebras.hpp"
#include "whopf/dwha.hpp"
#include "whopf/hopf_core.hpp"
#include "whopf/words.hpp"

namespace whopf {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
/// The literal is well formed but not an element of the selected algebra.
struct AlgebraMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Atom {
  enum class Kind { Unit, Word, NSymm, Subst };
  Kind kind = Kind::Unit;
  Word word;    // the word, the Z indices, or the top of a substitution
  Word bottom;  // substitutions only
};

struct Term {
  Coeff coeff = 1;
  std::vector<Atom> factors;
};

struct Expr {
  std::vector<Term> terms;
  /// Number of tensor factors, 0 for the zero expression.
  std::size_t arity() const {
    return terms.empty() ? 0 : terms.front().factors.size();
  }
};

/// Throws ParseError; mixed arity across terms is a parse error.
Expr parse_expr(const std::string& text);

std::string describe(const Atom& a);

Word atom_word(const Atom& a, const char* algebra);
PermWord atom_perm(const Atom& a);
NSymmMonomial atom_nsymm(const Atom& a);
Substitution atom_subst(const Atom& a);

/// Converts a one-factor expression, mapping every atom through `conv`.
template <class B, class F>
LinComb<B> to_lincomb(const Expr& e, F&& conv) {
  if (e.arity() > 1) {
    throw AlgebraMismatch("expected an element, got a tensor");
  }
  LinComb<B> out;
  for (const auto& t : e.terms) {
    out.add(conv(t.factors.front()), t.coeff);
  }
  return out;
}

template <class B, class F>
LinComb<Tensor2<B>> to_lincomb2(const Expr& e, F&& conv) {
  if (e.arity() != 0 && e.arity() != 2) {
    throw AlgebraMismatch("expected a tensor of two factors");
  }
  LinComb<Tensor2<B>> out;
  for (const auto& t : e.terms) {
    out.add(Tensor2<B>{conv(t.factors[0]), conv(t.factors[1])}, t.coeff);
  }
  return out;
}

}  // namespace whopf
