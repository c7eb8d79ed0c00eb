#pragma once

// Hopf algebras of endomorphisms.
//
// Part one: permutations, substitutions and arbitrary ("naive") words acting
// on the shuffle algebra, convolution of such actions, and the projected
// coconvolution procedure that reads a coproduct off mu o f o m.
//
// Part two: End(H) for a Hopf algebra H of finite rank, with convolution as
// product, coconvolution as coproduct and the trace pairing.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "whopf/dwha.hpp"
#include "whopf/hopf_core.hpp"
#include "whopf/words.hpp"

namespace whopf {

// ---------------------------------------------------------------------------
// Actions on Shuffle

/// [a1..am] -> [a_{s1}, ..., a_{sm}] on words of length m, zero elsewhere.
struct PermAction {
  PermWord perm;
};
/// Zero unless the word matches the top pattern; then the bottom pattern
/// instantiated by the induced letter assignment.
struct SubstAction {
  Substitution subst;
};
/// For s of height m: [a1..am] -> [a_{s1}, ..., a_{sn}] on words of length m,
/// zero elsewhere.
struct NaiveWordAction {
  Word word;
};

using ActionKind = std::variant<PermAction, SubstAction, NaiveWordAction>;

struct DisjointnessViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

LinComb<Word> act(const ActionKind& k, const Word& a);
LinComb<Word> act(const ActionKind& k, const LinComb<Word>& a);
std::string to_string(const ActionKind& k);

/// m_Sh o (x (x) y) o mu_Sh applied to a.
LinComb<Word> convolution_action(const ActionKind& x, const ActionKind& y,
                                 const Word& a);

/// Apply x to a shuffled with b, cut every resulting word, and keep the cuts
/// whose left half uses only letters of a and right half only letters of b.
/// Throws DisjointnessViolation if a and b share a letter.
LinComb<Tensor2<Word>> projected_coconvolution(const ActionKind& x,
                                               const Word& a, const Word& b);

/// The coproduct candidate the projection procedure produces for naive word
/// actions: for s of height m and every split m = m1 + m2, project against
/// a = [1..m1], b = [m1+1..m] and read the surviving cuts back as words.
LinComb<Tensor2<Word>> naive_coproduct(const Word& s);
/// Words with the height-shifted shuffle product and naive_coproduct.
HopfStructure<Word> naive_hopf();

/// First pair (in words_up_to order) on which naive_hopf violates
/// mu(ab) = mu(a)mu(b), searching words of length and height <= bound.
std::optional<Violation> find_naive_failure(std::size_t max_len,
                                            Letter max_height);

// ---------------------------------------------------------------------------
// End(H) for H of finite rank

/// Square integer matrix; the (r, c) entry is the u_r coefficient of f(u_c).
class Endo {
 public:
  Endo() = default;
  explicit Endo(std::size_t n) : n_(n), a_(n * n) {}

  static Endo identity(std::size_t n);
  static Endo unit_matrix(std::size_t n, std::size_t r, std::size_t c);

  std::size_t rank() const { return n_; }
  Coeff& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Coeff& operator()(std::size_t r, std::size_t c) const {
    return a_[r * n_ + c];
  }
  Coeff trace() const;
  Endo transpose() const;

  /// Composition: (f * g)(x) = f(g(x)).
  friend Endo operator*(const Endo& f, const Endo& g);
  friend Endo operator+(const Endo& f, const Endo& g);
  friend Endo operator*(const Coeff& c, const Endo& f);
  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Coeff> a_;
};

std::string to_string(const Endo& f);

struct RankMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidHopfData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structure constants of a Hopf algebra on the basis u_0..u_{n-1}. The
/// constructor checks every Hopf axiom over the full basis.
class FiniteHopfData {
 public:
  FiniteHopfData(std::string name,
                 std::vector<std::vector<LinComb<std::size_t>>> product,
                 std::vector<LinComb<Tensor2<std::size_t>>> coproduct,
                 LinComb<std::size_t> unit, std::vector<Coeff> counit,
                 Endo antipode);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return counit_.size(); }
  const LinComb<std::size_t>& product(std::size_t i, std::size_t j) const {
    return product_[i][j];
  }
  const LinComb<Tensor2<std::size_t>>& coproduct(std::size_t i) const {
    return coproduct_[i];
  }
  const LinComb<std::size_t>& unit() const { return unit_; }
  const Coeff& counit(std::size_t i) const { return counit_[i]; }
  const Endo& antipode() const { return antipode_; }

  HopfStructure<std::size_t> structure() const;
  std::vector<std::size_t> basis() const;

 private:
  std::string name_;
  std::vector<std::vector<LinComb<std::size_t>>> product_;
  std::vector<LinComb<Tensor2<std::size_t>>> coproduct_;
  LinComb<std::size_t> unit_;
  std::vector<Coeff> counit_;
  Endo antipode_;
};

using GroupTable = std::vector<std::vector<std::size_t>>;

/// Group algebra: product from the table, mu(g) = g (x) g, eps(g) = 1,
/// S(g) = g^-1. Validates closure, associativity, identity and inverses;
/// when inverses are given they must match the table. Throws NotAGroup.
FiniteHopfData finite_hopf_group_algebra(
    std::string name, const GroupTable& mult,
    const std::optional<std::vector<std::size_t>>& inverses = std::nullopt);

/// c1 (trivial), c2, c3, c4, s3.
GroupTable builtin_group_table(const std::string& name);
/// First line n, then n lines of n 0-based indices.
GroupTable parse_group_table(const std::string& text);

struct MatrixUnit {
  std::size_t row;
  std::size_t col;

  friend auto operator<=>(const MatrixUnit&, const MatrixUnit&) = default;
  friend bool operator==(const MatrixUnit&, const MatrixUnit&) = default;
};

std::string to_string(const MatrixUnit& e);

LinComb<MatrixUnit> matrix_units_of(const Endo& f);
Endo endo_from_units(std::size_t n, const LinComb<MatrixUnit>& x);

/// m_H o (f (x) g) o mu_H
Endo end_conv(const FiniteHopfData& h, const Endo& f, const Endo& g);
/// mu_H o f o m_H expanded in the basis E_ij (x) E_kl of End(H) (x) End(H).
LinComb<Tensor2<MatrixUnit>> end_coconv(const FiniteHopfData& h, const Endo& f);
/// The n^2 x n^2 matrix, on the basis u_j (x) u_l at index j*n + l, of the
/// endomorphism of H (x) H that a tensor of endomorphisms represents.
Endo contract(std::size_t n, const LinComb<Tensor2<MatrixUnit>>& x);
/// The n^2 x n^2 matrix of mu_H o f o m_H computed directly.
Endo coconv_matrix(const FiniteHopfData& h, const Endo& f);
/// H -> Z -> H
Endo end_unit(const FiniteHopfData& h);
/// eps(f(1))
Coeff end_counit(const FiniteHopfData& h, const Endo& f);
/// S o f o S
Endo end_antipode(const FiniteHopfData& h, const Endo& f);
/// trace(g o f), the evaluation of f (x) g on sum_i u_i (x) v^i.
Coeff end_pair(const Endo& f, const Endo& g);

HopfStructure<MatrixUnit> end_hopf(const FiniteHopfData& h);
std::vector<MatrixUnit> matrix_unit_basis(std::size_t n);

struct EndHopfReport {
  std::string group;
  /// assoc, coassoc (with counit laws), bialgebra, antipode.
  std::vector<Report> laws;
  /// <f*g, h> = <f (x) g, Delta h> with <f, g> = trace(g o f).
  Report selfdual_trace;
  /// The same identity with <f, g> = trace(g^T o f).
  Report selfdual_transpose;

  bool structural_pass() const;
  std::string note() const;
  std::string to_string() const;
};

EndHopfReport end_hopf_check(const FiniteHopfData& h);

/// A triple of matrix units with f o (g * h) != (f o g) * (f o h), first in
/// row-major enumeration order.
struct NondistributiveWitness {
  MatrixUnit f;
  MatrixUnit g;
  MatrixUnit h;
  Endo lhs;
  Endo rhs;
};
std::optional<NondistributiveWitness> find_nondistributive(
    const FiniteHopfData& h);

}  // namespace whopf
