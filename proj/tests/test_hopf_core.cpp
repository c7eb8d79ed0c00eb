#include "whopf/base_algebras.hpp"
#include "whopf/hopf_core.hpp"
#include "whopf/mpr.hpp"

#include "doctest.h"

using namespace whopf;

namespace {

auto id_map = [](const Word& w) { return LinComb<Word>(w); };

// Shuffle with a coproduct that drops the x (x) 1 term: not coassociative
// with its counit.
HopfStructure<Word> broken_shuffle() {
  auto h = shuffle_hopf();
  h.name = "broken";
  h.coproduct = [](const Word& w) {
    auto out = shuffle_coproduct(w);
    if (!w.empty()) {
      out.add(Tensor2<Word>{w, Word{}}, -1);
      out.add(Tensor2<Word>{w, w}, 1);
    }
    return out;
  };
  return h;
}

}  // namespace

TEST_CASE("convolution on shuffle") {
  const auto h = shuffle_hopf();
  CHECK(convolution(h, id_map, id_map, Word{1}) == LinComb<Word>(Word{1}, 2));
  CHECK(convolution(h, id_map, shuffle_antipode, Word{1}).is_zero());
  auto ue = [&](const Word& w) { return unit_counit(h, w); };
  CHECK(convolution(h, ue, ue, Word{}) == LinComb<Word>(Word{}));
}

TEST_CASE("antipode recursion") {
  const auto sh = shuffle_hopf();
  CHECK(antipode(sh, Word{4, 3, 5, 1}) == LinComb<Word>(Word{1, 5, 3, 4}));
  CHECK(antipode(sh, Word{}) == LinComb<Word>(Word{}));
  CHECK(antipode(sh, Word{2}) == LinComb<Word>(Word{2}, -1));

  const auto m = mpr_hopf();
  CHECK(antipode(m, PermWord(Word{1, 2})) ==
        LinComb<PermWord>(PermWord(Word{2, 1})));
  CHECK(antipode(m, PermWord{}) == LinComb<PermWord>(PermWord{}));
}

TEST_CASE("antipode recursion matches the reversal formula") {
  const auto h = shuffle_hopf();
  Antipode<Word> s(h);
  for (const Word& w : compositions_up_to(6)) {
    CHECK(s(w) == shuffle_antipode(w));
  }
}

TEST_CASE("checkers pass on shuffle and mpr") {
  const auto sh = shuffle_hopf();
  const auto basis = compositions_up_to(5);
  CHECK(check_grading(sh, basis, "w5").passed());
  CHECK(check_assoc(sh, basis, "w5", 5).passed());
  CHECK(check_coassoc(sh, basis, "w5").passed());
  CHECK(check_bialgebra(sh, basis, "w5").passed());
  CHECK(check_antipode(sh, basis, "w5").passed());
  CHECK(check_antipode(sh, {Word{}}, "unit").passed());

  const auto m = mpr_hopf();
  const auto perms = permutations_up_to(4);
  CHECK(perms.size() == 34);
  CHECK(check_coassoc(m, perms, "len4").passed());
  CHECK(check_selfdual(m, mpr_pairing(), permutations_up_to(3), perms, "len3").passed());
}

TEST_CASE("checkers report violations") {
  const auto h = broken_shuffle();
  const auto basis = compositions_up_to(3);
  const Report r = check_coassoc(h, basis, "w3");
  CHECK_FALSE(r.passed());
  CHECK(r.cases == basis.size());
  CHECK(r.summary().rfind("CHECK coassoc broken w3 FAIL ", 0) == 0);
  CHECK(r.to_string().rfind("VIOLATION ", 0) == 0);

  // A wrong antipode fails the convolution law.
  const auto sh = shuffle_hopf();
  LinearMap<Word> wrong = [](const Word& w) { return LinComb<Word>(reverse(w)); };
  CHECK_FALSE(check_antipode(sh, compositions_up_to(2), "w2", wrong).passed());
  LinearMap<Word> right = shuffle_antipode;
  CHECK(check_antipode(sh, compositions_up_to(4), "w4", right).passed());
}

TEST_CASE("a non-adjoint pairing fails the self-duality check") {
  const auto m = mpr_hopf();
  PairingStructure<PermWord> same{
      [](const PermWord& a, const PermWord& b) { return Coeff(a == b ? 1 : 0); },
      [](const PermWord& a) { return a; }};
  CHECK_FALSE(check_selfdual(m, same, permutations_up_to(2), permutations_up_to(3), "len2")
                  .passed());
}

TEST_CASE("report text format") {
  Report r{"assoc", "mpr", "len<=2", {}, 3};
  CHECK(r.summary() == "CHECK assoc mpr len<=2 PASS 0");
  r.violations.push_back({"associativity", "a,b,c", "x", "y"});
  CHECK(r.to_string() ==
        "VIOLATION associativity a,b,c lhs=x rhs=y\nCHECK assoc mpr len<=2 FAIL 1\n");
}
