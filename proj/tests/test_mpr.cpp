#include "whopf/mpr.hpp"

#include "doctest.h"

using namespace whopf;

namespace {

PermWord p(std::initializer_list<Letter> w) { return PermWord(Word(w)); }

}  // namespace

TEST_CASE("mpr product") {
  LinComb<PermWord> expected;
  for (auto w : {p({1, 4, 3, 2}), p({4, 1, 3, 2}), p({4, 3, 1, 2}), p({4, 3, 2, 1})}) {
    expected.add(w, 1);
  }
  CHECK(mpr_product(p({1}), p({3, 2, 1})) == expected);
  CHECK(mpr_product(PermWord{}, p({2, 1})) == LinComb<PermWord>(p({2, 1})));

  LinComb<PermWord> ones;
  ones.add(p({1, 2}), 1);
  ones.add(p({2, 1}), 1);
  CHECK(mpr_product(p({1}), p({1})) == ones);
}

TEST_CASE("mpr products are sums of permutations") {
  for (const auto& a : permutations_up_to(3)) {
    for (const auto& b : permutations_up_to(3)) {
      const auto ab = mpr_product(a, b);
      for (const auto& [w, c] : ab) {
        CHECK(is_permutation(w.word()));
        CHECK(c == 1);
      }
      CHECK(ab.size() > 0);
    }
  }
}

TEST_CASE("mpr coproduct") {
  LinComb<Tensor2<PermWord>> expected;
  expected.add({PermWord{}, p({2, 1})}, 1);
  expected.add({p({1}), p({1})}, 1);
  expected.add({p({2, 1}), PermWord{}}, 1);
  CHECK(mpr_coproduct(p({2, 1})) == expected);

  CHECK(mpr_coproduct(p({3, 1, 4, 5, 2})).coeff({p({2, 1}), p({2, 3, 1})}) == 1);
  CHECK(mpr_coproduct(PermWord{}) ==
        LinComb<Tensor2<PermWord>>(Tensor2<PermWord>{PermWord{}, PermWord{}}));
}

TEST_CASE("inverse, pairing and composition") {
  CHECK(mpr_inverse(p({2, 3, 1})) == p({3, 1, 2}));
  CHECK(mpr_inverse(p({2, 1})) == p({2, 1}));
  CHECK(mpr_inverse(PermWord{}) == PermWord{});

  CHECK(mpr_pair(p({2, 3, 1}), p({3, 1, 2})) == 1);
  CHECK(mpr_pair(p({2, 3, 1}), p({2, 3, 1})) == 0);
  CHECK(mpr_pair(PermWord{}, PermWord{}) == 1);

  CHECK(mpr_compose(p({2, 1}), p({2, 1})) == LinComb<PermWord>(p({1, 2})));
  CHECK(mpr_compose(p({2, 3, 1}), p({3, 1, 2})) == LinComb<PermWord>(p({1, 2, 3})));
  CHECK(mpr_compose(p({1}), p({2, 1})).is_zero());
  // [a_{b1}, ..., a_{bn}]
  CHECK(mpr_compose(p({2, 1, 3}), p({1, 3, 2})) == LinComb<PermWord>(p({2, 3, 1})));
}

TEST_CASE("pairing is symmetric and composition with the inverse is the identity") {
  for (const auto& a : permutations_up_to(4)) {
    CHECK(mpr_compose(a, mpr_inverse(a)) ==
          LinComb<PermWord>(PermWord::identity(a.size())));
    for (const auto& b : permutations_of(a.size())) {
      CHECK(mpr_pair(a, b) == mpr_pair(b, a));
    }
  }
}

TEST_CASE("mpr Hopf axioms up to length 4") {
  const auto h = mpr_hopf();
  const auto basis = permutations_up_to(4);
  CHECK(permutations_of(3).size() == 6);
  CHECK(check_grading(h, basis, "").passed());
  CHECK(check_assoc(h, basis, "", 4).passed());
  CHECK(check_coassoc(h, basis, "").passed());
  CHECK(check_bialgebra(h, basis, "").passed());
  CHECK(check_antipode(h, basis, "").passed());
  CHECK(check_selfdual(h, mpr_pairing(), permutations_up_to(3), basis, "").passed());
}
