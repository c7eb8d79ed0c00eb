#include "whopf/endo.hpp"
#include "whopf/mpr.hpp"
#include "whopf/wha.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

using namespace whopf;

namespace {

PermWord p(std::initializer_list<Letter> w) { return PermWord(Word(w)); }

Substitution s(std::initializer_list<Letter> top, std::initializer_list<Letter> bottom) {
  return canonicalize(Word(top), Word(bottom));
}

LinComb<Word> lw(Word w) { return LinComb<Word>(std::move(w)); }

// Words over 1..max_letter of length exactly n with pairwise distinct letters.
std::vector<Word> distinct_words(std::size_t n, Letter max_letter) {
  std::vector<Word> out;
  for (const Word& w : words_up_to(n, max_letter)) {
    if (w.size() == n && !has_repeats(w)) {
      out.push_back(w);
    }
  }
  return out;
}

Word apply_map(const Word& w, const std::vector<Letter>& phi) {
  std::vector<Letter> out;
  for (Letter a : w) {
    out.push_back(phi[a]);
  }
  return Word(std::move(out));
}

LinComb<Word> apply_map(const LinComb<Word>& x, const std::vector<Letter>& phi) {
  return lift([&](const Word& w) { return lw(apply_map(w, phi)); }, x);
}

}  // namespace

TEST_CASE("actions on words") {
  CHECK(act(PermAction{p({3, 1, 4, 5, 2})}, Word{1, 2}).is_zero());
  CHECK(act(PermAction{p({3, 1, 2})}, Word{7, 8, 9}) == lw(Word{9, 7, 8}));
  CHECK(act(SubstAction{s({1, 2, 1, 3, 3, 1, 4}, {2, 3, 2, 4, 1})},
            Word{9, 8, 9, 5, 5, 9, 7}) == lw(Word{8, 5, 8, 7, 9}));
  CHECK(act(SubstAction{s({1, 2, 1, 3, 3, 1, 4}, {2, 3, 2, 4, 1})},
            Word{9, 8, 7, 5, 5, 9, 7})
            .is_zero());
  CHECK(act(NaiveWordAction{Word{3, 2, 7, 2, 4}}, Word{10, 20, 30, 40, 50, 60, 70}) ==
        lw(Word{30, 20, 70, 20, 40}));
  CHECK(act(NaiveWordAction{Word{3, 2, 7, 2, 4}}, Word{1, 2, 3}).is_zero());
  CHECK(act(SubstAction{Substitution{}}, Word{}) == lw(Word{}));
  CHECK(act(SubstAction{Substitution{}}, Word{1}).is_zero());
}

TEST_CASE("the run-form substitution acts like the naive word on run-form inputs") {
  const Substitution e = encode(Word{3, 2, 7, 2, 4});
  const Word a{5, 5, 6, 8, 9, 9, 9};
  CHECK(act(SubstAction{e}, a) == act(NaiveWordAction{Word{3, 2, 7, 2, 4}}, a));
  CHECK(act(SubstAction{e}, Word{1, 2, 3, 4, 5, 6, 7}).is_zero());
}

TEST_CASE("convolution of permutation actions realizes the mpr product") {
  const ActionKind x = PermAction{p({1})};
  const ActionKind y = PermAction{p({3, 2, 1})};
  LinComb<Word> expected;
  for (const auto& [w, c] : mpr_product(p({1}), p({3, 2, 1}))) {
    expected.add(act(PermAction{w}, Word{5, 9, 8, 7}), c);
  }
  CHECK(convolution_action(x, y, Word{5, 9, 8, 7}) == expected);
  CHECK(convolution_action(PermAction{}, PermAction{}, Word{}) == lw(Word{}));

  for (const auto& a : permutations_up_to(2)) {
    for (const auto& b : permutations_up_to(2)) {
      for (const Word& w : distinct_words(a.size() + b.size(), 5)) {
        LinComb<Word> rhs;
        for (const auto& [q, c] : mpr_product(a, b)) {
          rhs.add(act(PermAction{q}, w), c);
        }
        CHECK(convolution_action(PermAction{a}, PermAction{b}, w) == rhs);
      }
    }
  }
}

TEST_CASE("convolution of naive actions realizes the wha product") {
  const Word x{2};
  const Word y{1, 1};
  for (const Word& a : words_up_to(3, 3)) {
    if (a.size() != 3) {
      continue;
    }
    LinComb<Word> rhs;
    for (const auto& [q, c] : wha_product(x, y)) {
      rhs.add(act(NaiveWordAction{q}, a), c);
    }
    CHECK(convolution_action(NaiveWordAction{x}, NaiveWordAction{y}, a) == rhs);
  }
}

TEST_CASE("projected coconvolution") {
  LinComb<Tensor2<Word>> expected;
  expected.add({Word{2, 1}, Word{4, 5, 3}}, 1);
  CHECK(projected_coconvolution(PermAction{p({3, 1, 4, 5, 2})}, Word{1, 2},
                                Word{3, 4, 5}) == expected);
  CHECK(projected_coconvolution(PermAction{}, Word{}, Word{}) ==
        LinComb<Tensor2<Word>>({Word{}, Word{}}));
  CHECK_THROWS_AS(projected_coconvolution(PermAction{p({1, 2})}, Word{1}, Word{1}),
                  DisjointnessViolation);
}

TEST_CASE("projection recovers the mpr coproduct") {
  for (const auto& sigma : permutations_up_to(3)) {
    const std::size_t n = sigma.size();
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Letter> left(k);
      std::vector<Letter> right(n - k);
      std::iota(left.begin(), left.end(), Letter{1});
      std::iota(right.begin(), right.end(), static_cast<Letter>(k + 1));
      const Word a(left);
      const Word b(right);
      LinComb<Tensor2<Word>> expected;
      for (const auto& [t, c] : mpr_coproduct(sigma)) {
        expected.add(tensor(act(PermAction{t.left}, a), act(PermAction{t.right}, b)), c);
      }
      CHECK(projected_coconvolution(PermAction{sigma}, a, b) == expected);
    }
  }
}

TEST_CASE("recipe composition acts as composition") {
  const auto subs = enumerate_substitutions(2, 3, 3);
  const auto words = words_up_to(3, 3);
  for (const auto& f : subs) {
    for (const auto& g : subs) {
      const auto fg = subst_compose(f, g);
      for (const Word& w : words) {
        LinComb<Word> lhs;
        for (const auto& [q, c] : fg) {
          lhs.add(act(SubstAction{q}, w), c);
        }
        CHECK(lhs == act(SubstAction{f}, act(SubstAction{g}, w)));
      }
    }
  }
}

TEST_CASE("homogeneity under injective letter maps") {
  const std::vector<Letter> phi{0, 4, 2, 7, 5};
  for (const auto& q : enumerate_substitutions(2, 3, 3)) {
    for (const Word& w : words_up_to(3, 4)) {
      CHECK(act(SubstAction{q}, apply_map(w, phi)) ==
            apply_map(act(SubstAction{q}, w), phi));
    }
  }
}

TEST_CASE("homogeneity fails for a merging letter map") {
  const Substitution q = s({1, 1}, {1});
  const std::vector<Letter> merge{0, 1, 1};
  CHECK(act(SubstAction{q}, apply_map(Word{1, 2}, merge)) == lw(Word{1}));
  CHECK(apply_map(act(SubstAction{q}, Word{1, 2}), merge).is_zero());
}

TEST_CASE("the naive construction is not a bialgebra") {
  const auto v = find_naive_failure(3, 3);
  REQUIRE(v.has_value());
  CHECK(v->law == "hopf-property");
  CHECK(v->elements == "[2],[1]");
  CHECK(v->lhs ==
        "1 (x) [1,2] + 1 (x) [2,1] + 1 (x) [2,3] + 1 (x) [3,2] + [1,2] (x) 1 + "
        "2*[1] (x) [2] + [2,1] (x) 1 + [2,3] (x) 1 + 2*[2] (x) [1] + [3,2] (x) 1");
  CHECK(v->rhs ==
        "1 (x) [1,2] + 1 (x) [2,1] + 1 (x) [2,3] + 1 (x) [3,2] + [1,2] (x) 1 + "
        "2*[1] (x) [1] + [1] (x) [2] + [2,1] (x) 1 + [2,3] (x) 1 + [2] (x) [1] + "
        "[3,2] (x) 1");

  const auto h = naive_hopf();
  const auto basis = words_up_to(2, 2);
  CHECK_FALSE(check_bialgebra(h, basis, "").passed());
  // On permutation words the candidate is the mpr coproduct.
  LinComb<Tensor2<Word>> mpr21;
  mpr21.add({Word{}, Word{2, 1}}, 1);
  mpr21.add({Word{1}, Word{1}}, 1);
  mpr21.add({Word{2, 1}, Word{}}, 1);
  CHECK(naive_coproduct(Word{2, 1}) == mpr21);
}

TEST_CASE("endomorphism matrices") {
  Endo f(2);
  f(0, 1) = 3;
  f(1, 0) = -1;
  CHECK(f * Endo::identity(2) == f);
  CHECK(Endo::identity(2) * f == f);
  CHECK((f * f)(0, 0) == -3);
  CHECK(f.transpose()(1, 0) == 3);
  CHECK(f.trace() == 0);
  CHECK(Endo::identity(3).trace() == 3);
  CHECK((f + f) == Coeff(2) * f);
  CHECK_THROWS_AS(f * Endo::identity(3), RankMismatch);
  CHECK(to_string(f) == "[0 3;-1 0]");
  CHECK(endo_from_units(2, matrix_units_of(f)) == f);
}

TEST_CASE("group algebras") {
  const auto c2 = finite_hopf_group_algebra("c2", builtin_group_table("c2"));
  CHECK(c2.rank() == 2);
  CHECK(finite_hopf_group_algebra("c1", builtin_group_table("c1")).rank() == 1);
  const auto s3 = finite_hopf_group_algebra("s3", builtin_group_table("s3"));
  CHECK(s3.rank() == 6);
  // s3 is not commutative
  const auto t = builtin_group_table("s3");
  bool commutative = true;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      commutative = commutative && t[i][j] == t[j][i];
    }
  }
  CHECK_FALSE(commutative);
  CHECK_THROWS_AS(builtin_group_table("z9"), std::invalid_argument);

  CHECK_THROWS_AS(finite_hopf_group_algebra("bad", {{0, 1}, {1, 1}}), NotAGroup);
  CHECK_THROWS_AS(finite_hopf_group_algebra("bad", {{0, 2}, {1, 0}}), NotAGroup);
  CHECK_THROWS_AS(finite_hopf_group_algebra("c2", builtin_group_table("c2"),
                                            std::vector<std::size_t>{1, 0}),
                  NotAGroup);
  CHECK_NOTHROW(finite_hopf_group_algebra("c2", builtin_group_table("c2"),
                                          std::vector<std::size_t>{0, 1}));
}

TEST_CASE("group table files") {
  CHECK(parse_group_table("2\n0 1\n1 0\n") == builtin_group_table("c2"));
  CHECK_THROWS_AS(parse_group_table("2\n0 1\n1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_table("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_table("1\n0 0"), std::invalid_argument);
}

TEST_CASE("structure constants are validated") {
  const auto c2 = finite_hopf_group_algebra("c2", builtin_group_table("c2"));
  std::vector<std::vector<LinComb<std::size_t>>> product(
      2, std::vector<LinComb<std::size_t>>(2));
  std::vector<LinComb<Tensor2<std::size_t>>> coproduct(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      product[i][j] = c2.product(i, j);
    }
    coproduct[i] = c2.coproduct(i);
  }
  Endo wrong = Endo::identity(2);
  wrong(0, 0) = 2;
  CHECK_THROWS_AS(FiniteHopfData("c2", product, coproduct, c2.unit(),
                                 {Coeff(1), Coeff(1)}, wrong),
                  InvalidHopfData);
  CHECK_NOTHROW(FiniteHopfData("c2", product, coproduct, c2.unit(),
                               {Coeff(1), Coeff(1)}, c2.antipode()));
  CHECK_THROWS_AS(FiniteHopfData("c2", product, coproduct, c2.unit(),
                                 {Coeff(1)}, c2.antipode()),
                  InvalidHopfData);
}

TEST_CASE("convolution of endomorphisms") {
  for (const char* g : {"c2", "c3", "s3"}) {
    const auto h = finite_hopf_group_algebra(g, builtin_group_table(g));
    const std::size_t n = h.rank();
    CHECK(end_conv(h, Endo::identity(n), h.antipode()) == end_unit(h));
    CHECK(end_conv(h, h.antipode(), Endo::identity(n)) == end_unit(h));
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int i = 0; i < 5; ++i) {
      Endo x(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          x(r, c) = d(rng);
        }
      }
      CHECK(end_conv(h, end_unit(h), x) == x);
      CHECK(end_conv(h, x, end_unit(h)) == x);
    }
  }
  const auto c2 = finite_hopf_group_algebra("c2", builtin_group_table("c2"));
  Endo squares(2);  // g -> g^2
  squares(0, 0) = 1;
  squares(0, 1) = 1;
  CHECK(end_conv(c2, Endo::identity(2), Endo::identity(2)) == squares);
}

TEST_CASE("coconvolution of endomorphisms") {
  const auto c1 = finite_hopf_group_algebra("c1", builtin_group_table("c1"));
  CHECK(end_coconv(c1, Coeff(5) * Endo::identity(1)) ==
        LinComb<Tensor2<MatrixUnit>>({MatrixUnit{0, 0}, MatrixUnit{0, 0}}, 5));

  for (const char* g : {"c2", "c3"}) {
    const auto h = finite_hopf_group_algebra(g, builtin_group_table(g));
    const std::size_t n = h.rank();
    const auto ue = matrix_units_of(end_unit(h));
    CHECK(end_coconv(h, end_unit(h)) == tensor(ue, ue));
    CHECK(contract(n, end_coconv(h, Endo::identity(n))) ==
          coconv_matrix(h, Endo::identity(n)));
    for (const auto& e : matrix_unit_basis(n)) {
      const Endo f = Endo::unit_matrix(n, e.row, e.col);
      CHECK(contract(n, end_coconv(h, f)) == coconv_matrix(h, f));
    }
  }
}

TEST_CASE("trace pairing") {
  const auto c2 = finite_hopf_group_algebra("c2", builtin_group_table("c2"));
  CHECK(end_pair(Endo::identity(2), Endo::identity(2)) == 2);
  CHECK(end_pair(Endo(2), c2.antipode()) == 0);
  CHECK_THROWS_AS(end_pair(Endo(2), Endo(3)), RankMismatch);
}

TEST_CASE("End(H) is a Hopf algebra") {
  for (const char* g : {"c1", "c2", "c3"}) {
    const auto h = finite_hopf_group_algebra(g, builtin_group_table(g));
    const auto r = end_hopf_check(h);
    CHECK(r.structural_pass());
    CHECK(r.laws.size() == 4);
    CHECK(r.selfdual_trace.passed());
  }
  const auto c2 = finite_hopf_group_algebra("c2", builtin_group_table("c2"));
  CHECK_FALSE(end_hopf_check(c2).selfdual_transpose.passed());
  CHECK(end_hopf_check(c2).note() ==
        "NOTE selfdual End(c2) holds for trace(g o f), no transpose twist");
}

TEST_CASE("composition does not distribute over convolution") {
  const auto c2 = finite_hopf_group_algebra("c2", builtin_group_table("c2"));
  const auto w = find_nondistributive(c2);
  REQUIRE(w.has_value());
  CHECK(w->f == MatrixUnit{0, 0});
  CHECK(w->g == MatrixUnit{1, 0});
  CHECK(w->h == MatrixUnit{1, 0});
  CHECK(w->lhs != w->rhs);
  CHECK_FALSE(find_nondistributive(
                  finite_hopf_group_algebra("c1", builtin_group_table("c1")))
                  .has_value());
}
