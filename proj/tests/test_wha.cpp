#include "whopf/wha.hpp"

#include "doctest.h"

#include <random>

using namespace whopf;

namespace {

Substitution s(std::initializer_list<Letter> top, std::initializer_list<Letter> bottom) {
  return canonicalize(Word(top), Word(bottom));
}

}  // namespace

TEST_CASE("run encoding") {
  CHECK(encode(Word{3, 2, 7, 2, 4}) == s({1, 1, 2, 3, 4, 4, 4}, {2, 1, 4, 1, 3}));
  CHECK(encode(Word{}) == Substitution{});
  CHECK(encode(Word{1}) == s({1}, {1}));
  CHECK(to_string(encode(Word{3, 2, 7, 2, 4})) == "{[1,1,2,3,4,4,4]/[2,1,4,1,3]}");
}

TEST_CASE("decoding") {
  CHECK(decode(s({1, 1, 2, 3, 4, 4, 4}, {2, 1, 4, 1, 3})) == Word{3, 2, 7, 2, 4});
  CHECK(decode(Substitution{}) == Word{});
  // runs (2,1,3) with bottom referring to the first, third and second run
  CHECK(decode(s({1, 1, 2, 3, 3, 3}, {1, 3, 1, 2})) == Word{2, 6, 2, 3});
  CHECK_FALSE(is_wha_form(s({1, 2, 1}, {1, 2})));
  CHECK_THROWS_AS(decode(s({1, 2, 1}, {1, 2})), NotWHAForm);
}

TEST_CASE("decode inverts encode") {
  for (const Word& w : words_up_to(4, 5)) {
    const Substitution e = encode(w);
    CHECK(is_wha_form(e));
    CHECK(e.degree() == support(w).size());
    CHECK(decode(e) == w);
  }
}

TEST_CASE("encode inverts decode on run-form substitutions") {
  for (const Substitution& q : enumerate_substitutions(3, 4, 3)) {
    if (is_wha_form(q)) {
      CHECK(encode(decode(q)) == q);
    }
  }
}

TEST_CASE("wha product") {
  CHECK(wha_product(Word{1}, Word{3, 2, 1}) == shuffle(Word{1}, Word{4, 3, 2}));
  LinComb<Word> expected;
  expected.add(Word{2, 3, 3}, 1);
  expected.add(Word{3, 2, 3}, 1);
  expected.add(Word{3, 3, 2}, 1);
  CHECK(wha_product(Word{2}, Word{1, 1}) == expected);
  CHECK(wha_product(Word{}, Word{2, 2}) == LinComb<Word>(Word{2, 2}));
}

TEST_CASE("wha coproduct examples") {
  const Word a{3, 2, 7, 2, 4};
  LinComb<Tensor2<Word>> first;
  first.add({Word{}, a}, 1);
  first.add({Word{1}, Word{2, 6, 2, 3}}, 1);
  first.add({Word{3, 2, 6, 2}, Word{1}}, 1);
  first.add({a, Word{}}, 1);
  CHECK(wha_coproduct(a) == first);

  const Word b{7, 3, 2, 2, 4};
  LinComb<Tensor2<Word>> second;
  second.add({Word{}, b}, 1);
  second.add({Word{3}, Word{3, 2, 2, 4}}, 1);
  second.add({Word{4, 1}, Word{2, 2, 3}}, 1);
  second.add({Word{6, 3, 2, 2}, Word{1}}, 1);
  second.add({b, Word{}}, 1);
  CHECK(wha_coproduct(b) == second);

  CHECK(wha_coproduct(Word{}) == LinComb<Tensor2<Word>>({Word{}, Word{}}));
}

TEST_CASE("wha agrees with mpr on permutation words") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const Word& w : words_up_to(n, static_cast<Letter>(n))) {
      if (!is_permutation(w) || w.size() != n) {
        continue;
      }
      LinComb<Tensor2<Word>> expected;
      for (const auto& [l, r] : cuts(w)) {
        expected.add({standardize(l).word(), standardize(r).word()}, 1);
      }
      CHECK(wha_coproduct(w) == expected);
    }
  }
}

TEST_CASE("word enumeration") {
  const auto words = words_up_to(3, 3);
  CHECK(words.size() == 1 + 3 + 9 + 27);
  CHECK(words.front() == Word{});
  CHECK(words[1] == Word{1});
}

TEST_CASE("wha Hopf axioms within length 3, height 3") {
  const auto h = wha_hopf();
  const auto basis = words_up_to(3, 3);
  CHECK(check_grading(h, basis, "").passed());
  CHECK(check_assoc(h, basis, "", 3).passed());
  CHECK(check_coassoc(h, basis, "").passed());
  CHECK(check_bialgebra(h, basis, "").passed());
  CHECK(check_antipode(h, basis, "").passed());
}
