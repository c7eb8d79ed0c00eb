#include "whopf/endo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "whopf/base_algebras.hpp"
#include "whopf/wha.hpp"

namespace whopf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// [a_{s1}, ..., a_{sn}]
Word pick(const Word& a, const Word& positions) {
  std::vector<Letter> out;
  out.reserve(positions.size());
  for (Letter s : positions) {
    out.push_back(a[s - 1]);
  }
  return Word(std::move(out));
}

Word iota_word(Letter from, Letter to) {
  std::vector<Letter> v;
  for (Letter a = from; a <= to; ++a) {
    v.push_back(a);
  }
  return Word(std::move(v));
}

bool subset_of(const Word& w, const LetterSet& s) {
  return std::all_of(w.begin(), w.end(),
                     [&](Letter a) { return s.count(a) > 0; });
}

}  // namespace

// ---------------------------------------------------------------------------
// Actions

LinComb<Word> act(const ActionKind& k, const Word& a) {
  return std::visit(
      overloaded{
          [&](const PermAction& p) -> LinComb<Word> {
            if (a.size() != p.perm.size()) {
              return {};
            }
            return LinComb<Word>(pick(a, p.perm.word()));
          },
          [&](const SubstAction& s) -> LinComb<Word> {
            const Word& top = s.subst.top();
            if (!matches(a, top)) {
              return {};
            }
            std::map<Letter, Letter> value;
            for (std::size_t i = 0; i < a.size(); ++i) {
              value.emplace(top[i], a[i]);
            }
            std::vector<Letter> out;
            out.reserve(s.subst.bottom().size());
            for (Letter b : s.subst.bottom()) {
              out.push_back(value.at(b));
            }
            return LinComb<Word>(Word(std::move(out)));
          },
          [&](const NaiveWordAction& n) -> LinComb<Word> {
            if (a.size() != height(n.word)) {
              return {};
            }
            return LinComb<Word>(pick(a, n.word));
          },
      },
      k);
}

LinComb<Word> act(const ActionKind& k, const LinComb<Word>& a) {
  return lift([&](const Word& w) { return act(k, w); }, a);
}

std::string to_string(const ActionKind& k) {
  return std::visit(
      overloaded{
          [](const PermAction& p) { return "perm " + to_string(p.perm); },
          [](const SubstAction& s) { return "subst " + to_string(s.subst); },
          [](const NaiveWordAction& n) { return "naive " + to_string(n.word); },
      },
      k);
}

LinComb<Word> convolution_action(const ActionKind& x, const ActionKind& y,
                                 const Word& a) {
  LinComb<Word> out;
  for (const auto& [l, r] : cuts(a)) {
    out += lift2(shuffle, act(x, l), act(y, r));
  }
  return out;
}

LinComb<Tensor2<Word>> projected_coconvolution(const ActionKind& x,
                                               const Word& a, const Word& b) {
  const LetterSet sa = support(a);
  const LetterSet sb = support(b);
  for (Letter v : sa) {
    if (sb.count(v)) {
      throw DisjointnessViolation("supports of " + to_string(a) + " and " +
                                  to_string(b) + " overlap");
    }
  }
  LinComb<Tensor2<Word>> out;
  for (const auto& [w, c] : act(x, shuffle(a, b))) {
    for (auto& [l, r] : cuts(w)) {
      if (subset_of(l, sa) && subset_of(r, sb)) {
        out.add(Tensor2<Word>{std::move(l), std::move(r)}, c);
      }
    }
  }
  return out;
}

LinComb<Tensor2<Word>> naive_coproduct(const Word& s) {
  const Letter m = height(s);
  LinComb<Tensor2<Word>> out;
  for (Letter m1 = 0; m1 <= m; ++m1) {
    const Word a = iota_word(1, m1);
    const Word b = iota_word(m1 + 1, m);
    for (const auto& [t, c] :
         projected_coconvolution(NaiveWordAction{s}, a, b)) {
      std::vector<Letter> right = t.right.letters();
      for (Letter& v : right) {
        v -= m1;
      }
      out.add(Tensor2<Word>{t.left, Word(std::move(right))}, c);
    }
  }
  return out;
}

HopfStructure<Word> naive_hopf() {
  HopfStructure<Word> h;
  h.name = "naive";
  h.product = wha_product;
  h.coproduct = naive_coproduct;
  h.unit = LinComb<Word>(Word{});
  h.counit = [](const Word& w) { return Coeff(w.empty() ? 1 : 0); };
  h.degree = [](const Word& w) { return static_cast<std::size_t>(height(w)); };
  h.format = [](const Word& w) {
    return w.empty() ? std::string("1") : to_string(w);
  };
  return h;
}

std::optional<Violation> find_naive_failure(std::size_t max_len,
                                            Letter max_height) {
  const auto h = naive_hopf();
  const auto words = words_up_to(max_len, max_height);
  auto fmt2 = [&](const LinComb<Tensor2<Word>>& x) {
    return format_lincomb(x, [&](const Tensor2<Word>& t) {
      return h.format(t.left) + " (x) " + h.format(t.right);
    });
  };
  for (const Word& a : words) {
    for (const Word& b : words) {
      auto lhs = comultiply(h, h.product(a, b));
      auto rhs = multiply_tensor(h, h.coproduct(a), h.coproduct(b));
      if (lhs != rhs) {
        return Violation{"hopf-property", h.format(a) + "," + h.format(b),
                         fmt2(lhs), fmt2(rhs)};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Endo

Endo Endo::identity(std::size_t n) {
  Endo e(n);
  for (std::size_t i = 0; i < n; ++i) {
    e(i, i) = 1;
  }
  return e;
}

Endo Endo::unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  Endo e(n);
  e(r, c) = 1;
  return e;
}

Coeff Endo::trace() const {
  Coeff t = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

Endo Endo::transpose() const {
  Endo t(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Endo operator*(const Endo& f, const Endo& g) {
  if (f.rank() != g.rank()) {
    throw RankMismatch("composing endomorphisms of different rank");
  }
  const std::size_t n = f.rank();
  Endo out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      if (f(r, k) == 0) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += f(r, k) * g(k, c);
      }
    }
  }
  return out;
}

Endo operator+(const Endo& f, const Endo& g) {
  if (f.rank() != g.rank()) {
    throw RankMismatch("adding endomorphisms of different rank");
  }
  Endo out = f;
  for (std::size_t r = 0; r < f.rank(); ++r) {
    for (std::size_t c = 0; c < f.rank(); ++c) {
      out(r, c) += g(r, c);
    }
  }
  return out;
}

Endo operator*(const Coeff& k, const Endo& f) {
  Endo out = f;
  for (std::size_t r = 0; r < f.rank(); ++r) {
    for (std::size_t c = 0; c < f.rank(); ++c) {
      out(r, c) *= k;
    }
  }
  return out;
}

std::string to_string(const Endo& f) {
  std::string out = "[";
  for (std::size_t r = 0; r < f.rank(); ++r) {
    out += r ? ";" : "";
    for (std::size_t c = 0; c < f.rank(); ++c) {
      out += (c ? " " : "") + f(r, c).str();
    }
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// FiniteHopfData

FiniteHopfData::FiniteHopfData(
    std::string name, std::vector<std::vector<LinComb<std::size_t>>> product,
    std::vector<LinComb<Tensor2<std::size_t>>> coproduct,
    LinComb<std::size_t> unit, std::vector<Coeff> counit, Endo antipode)
    : name_(std::move(name)),
      product_(std::move(product)),
      coproduct_(std::move(coproduct)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = counit_.size();
  bool shapes = product_.size() == n && coproduct_.size() == n &&
                antipode_.rank() == n;
  for (const auto& row : product_) {
    shapes = shapes && row.size() == n;
  }
  if (!shapes) {
    throw InvalidHopfData(name_ + ": structure constants have inconsistent rank");
  }
  const auto h = structure();
  const auto basis = this->basis();
  const LinearMap<std::size_t> s = [this](const std::size_t& c) {
    LinComb<std::size_t> out;
    for (std::size_t r = 0; r < rank(); ++r) {
      out.add(r, antipode_(r, c));
    }
    return out;
  };
  for (const Report& r :
       {check_assoc(h, basis, "full"), check_coassoc(h, basis, "full"),
        check_bialgebra(h, basis, "full"),
        check_antipode(h, basis, "full", s)}) {
    if (!r.passed()) {
      throw InvalidHopfData(name_ + ": " + r.violations.front().to_string());
    }
  }
}

HopfStructure<std::size_t> FiniteHopfData::structure() const {
  auto prod = std::make_shared<const decltype(product_)>(product_);
  auto coprod = std::make_shared<const decltype(coproduct_)>(coproduct_);
  auto eps = std::make_shared<const decltype(counit_)>(counit_);
  HopfStructure<std::size_t> h;
  h.name = name_;
  h.product = [prod](const std::size_t& i, const std::size_t& j) {
    return (*prod)[i][j];
  };
  h.coproduct = [coprod](const std::size_t& i) { return (*coprod)[i]; };
  h.unit = unit_;
  h.counit = [eps](const std::size_t& i) { return (*eps)[i]; };
  h.format = [](const std::size_t& i) { return "u" + std::to_string(i); };
  return h;
}

std::vector<std::size_t> FiniteHopfData::basis() const {
  std::vector<std::size_t> b(rank());
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i] = i;
  }
  return b;
}

FiniteHopfData finite_hopf_group_algebra(
    std::string name, const GroupTable& mult,
    const std::optional<std::vector<std::size_t>>& inverses) {
  const std::size_t n = mult.size();
  if (n == 0) {
    throw NotAGroup(name + ": empty table");
  }
  for (const auto& row : mult) {
    if (row.size() != n) {
      throw NotAGroup(name + ": table is not square");
    }
    for (std::size_t v : row) {
      if (v >= n) {
        throw NotAGroup(name + ": entry out of range");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          throw NotAGroup(name + ": not associative");
        }
      }
    }
  }
  std::optional<std::size_t> e;
  for (std::size_t i = 0; i < n && !e; ++i) {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) {
      ok = ok && mult[i][x] == x && mult[x][i] == x;
    }
    if (ok) {
      e = i;
    }
  }
  if (!e) {
    throw NotAGroup(name + ": no identity element");
  }
  std::vector<std::size_t> inv(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mult[x][y] == *e && mult[y][x] == *e) {
        inv[x] = y;
      }
    }
    if (inv[x] == n) {
      throw NotAGroup(name + ": element " + std::to_string(x) +
                      " has no inverse");
    }
  }
  if (inverses && *inverses != inv) {
    throw NotAGroup(name + ": inverse table disagrees with multiplication");
  }
  std::vector<std::vector<LinComb<std::size_t>>> product(
      n, std::vector<LinComb<std::size_t>>(n));
  std::vector<LinComb<Tensor2<std::size_t>>> coproduct(n);
  Endo s(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      product[i][j] = LinComb<std::size_t>(mult[i][j]);
    }
    coproduct[i] = LinComb<Tensor2<std::size_t>>(Tensor2<std::size_t>{i, i});
    s(inv[i], i) = 1;
  }
  return FiniteHopfData(std::move(name), std::move(product),
                        std::move(coproduct), LinComb<std::size_t>(*e),
                        std::vector<Coeff>(n, Coeff(1)), std::move(s));
}

GroupTable builtin_group_table(const std::string& name) {
  auto cyclic = [](std::size_t n) {
    GroupTable t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = (i + j) % n;
      }
    }
    return t;
  };
  if (name == "c1" || name == "trivial") {
    return cyclic(1);
  }
  if (name == "c2") {
    return cyclic(2);
  }
  if (name == "c3") {
    return cyclic(3);
  }
  if (name == "c4") {
    return cyclic(4);
  }
  if (name == "s3") {
    // Permutations of {0,1,2} in lexicographic order; (p q)(x) = p(q(x)).
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    GroupTable t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        std::vector<std::size_t> q(3);
        for (std::size_t x = 0; x < 3; ++x) {
          q[x] = perms[i][perms[j][x]];
        }
        t[i][j] = static_cast<std::size_t>(
            std::find(perms.begin(), perms.end(), q) - perms.begin());
      }
    }
    return t;
  }
  throw std::invalid_argument("unknown group: " + name);
}

GroupTable parse_group_table(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) {
    throw std::invalid_argument("group table: expected a positive size");
  }
  const auto size = static_cast<std::size_t>(n);
  GroupTable t(size, std::vector<std::size_t>(size));
  for (auto& row : t) {
    for (auto& v : row) {
      long long x = 0;
      if (!(in >> x) || x < 0) {
        throw std::invalid_argument("group table: expected " +
                                    std::to_string(size * size) +
                                    " nonnegative entries");
      }
      v = static_cast<std::size_t>(x);
    }
  }
  std::string extra;
  if (in >> extra) {
    throw std::invalid_argument("group table: trailing input '" + extra + "'");
  }
  return t;
}

// ---------------------------------------------------------------------------
// End(H)

std::string to_string(const MatrixUnit& e) {
  return "E(" + std::to_string(e.row) + "," + std::to_string(e.col) + ")";
}

LinComb<MatrixUnit> matrix_units_of(const Endo& f) {
  LinComb<MatrixUnit> out;
  for (std::size_t r = 0; r < f.rank(); ++r) {
    for (std::size_t c = 0; c < f.rank(); ++c) {
      out.add(MatrixUnit{r, c}, f(r, c));
    }
  }
  return out;
}

Endo endo_from_units(std::size_t n, const LinComb<MatrixUnit>& x) {
  Endo f(n);
  for (const auto& [e, c] : x) {
    f(e.row, e.col) += c;
  }
  return f;
}

namespace {

void require_rank(const FiniteHopfData& h, const Endo& f) {
  if (f.rank() != h.rank()) {
    throw RankMismatch("endomorphism of rank " + std::to_string(f.rank()) +
                       " on algebra of rank " + std::to_string(h.rank()));
  }
}

}  // namespace

Endo end_conv(const FiniteHopfData& h, const Endo& f, const Endo& g) {
  require_rank(h, f);
  require_rank(h, g);
  const std::size_t n = h.rank();
  Endo out(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [t, k] : h.coproduct(c)) {
      for (std::size_t i = 0; i < n; ++i) {
        if (f(i, t.left) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (g(j, t.right) == 0) {
            continue;
          }
          const Coeff w = k * f(i, t.left) * g(j, t.right);
          for (const auto& [r, pc] : h.product(i, j)) {
            out(r, c) += w * pc;
          }
        }
      }
    }
  }
  return out;
}

Endo coconv_matrix(const FiniteHopfData& h, const Endo& f) {
  require_rank(h, f);
  const std::size_t n = h.rank();
  Endo out(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& [k, pc] : h.product(j, l)) {
        for (std::size_t i = 0; i < n; ++i) {
          if (f(i, k) == 0) {
            continue;
          }
          for (const auto& [t, cc] : h.coproduct(i)) {
            out(t.left * n + t.right, j * n + l) += pc * f(i, k) * cc;
          }
        }
      }
    }
  }
  return out;
}

LinComb<Tensor2<MatrixUnit>> end_coconv(const FiniteHopfData& h, const Endo& f) {
  const std::size_t n = h.rank();
  const Endo m = coconv_matrix(h, f);
  // E_rj (x) E_sl sends u_j (x) u_l to u_r (x) u_s.
  LinComb<Tensor2<MatrixUnit>> out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          out.add(Tensor2<MatrixUnit>{MatrixUnit{r, j}, MatrixUnit{s, l}},
                  m(r * n + s, j * n + l));
        }
      }
    }
  }
  return out;
}

Endo contract(std::size_t n, const LinComb<Tensor2<MatrixUnit>>& x) {
  Endo out(n * n);
  for (const auto& [t, c] : x) {
    out(t.left.row * n + t.right.row, t.left.col * n + t.right.col) += c;
  }
  return out;
}

Endo end_unit(const FiniteHopfData& h) {
  const std::size_t n = h.rank();
  Endo out(n);
  for (const auto& [r, u] : h.unit()) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) += u * h.counit(c);
    }
  }
  return out;
}

Coeff end_counit(const FiniteHopfData& h, const Endo& f) {
  require_rank(h, f);
  Coeff out = 0;
  for (const auto& [c, u] : h.unit()) {
    for (std::size_t r = 0; r < h.rank(); ++r) {
      out += h.counit(r) * f(r, c) * u;
    }
  }
  return out;
}

Endo end_antipode(const FiniteHopfData& h, const Endo& f) {
  require_rank(h, f);
  return h.antipode() * f * h.antipode();
}

Coeff end_pair(const Endo& f, const Endo& g) {
  if (f.rank() != g.rank()) {
    throw RankMismatch("pairing endomorphisms of different rank");
  }
  return (g * f).trace();
}

std::vector<MatrixUnit> matrix_unit_basis(std::size_t n) {
  std::vector<MatrixUnit> out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out.push_back({r, c});
    }
  }
  return out;
}

HopfStructure<MatrixUnit> end_hopf(const FiniteHopfData& h) {
  auto data = std::make_shared<const FiniteHopfData>(h);
  const std::size_t n = h.rank();
  auto as_endo = [n](const MatrixUnit& e) {
    return Endo::unit_matrix(n, e.row, e.col);
  };
  HopfStructure<MatrixUnit> out;
  out.name = "End(" + h.name() + ")";
  out.product = [data, as_endo](const MatrixUnit& a, const MatrixUnit& b) {
    return matrix_units_of(end_conv(*data, as_endo(a), as_endo(b)));
  };
  out.coproduct = [data, as_endo](const MatrixUnit& a) {
    return end_coconv(*data, as_endo(a));
  };
  out.unit = matrix_units_of(end_unit(h));
  out.counit = [data, as_endo](const MatrixUnit& a) {
    return end_counit(*data, as_endo(a));
  };
  out.format = [](const MatrixUnit& e) { return to_string(e); };
  return out;
}

bool EndHopfReport::structural_pass() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const Report& r) { return r.passed(); });
}

std::string EndHopfReport::note() const {
  std::string form;
  if (selfdual_trace.passed() && selfdual_transpose.passed()) {
    form = "both trace(g o f) and trace(g^T o f)";
  } else if (selfdual_trace.passed()) {
    form = "trace(g o f), no transpose twist";
  } else if (selfdual_transpose.passed()) {
    form = "trace(g^T o f), with transpose twist";
  } else {
    form = "neither trace(g o f) nor trace(g^T o f)";
  }
  return "NOTE selfdual End(" + group + ") holds for " + form;
}

std::string EndHopfReport::to_string() const {
  std::string out;
  for (const Report& r : laws) {
    out += r.to_string();
  }
  out += selfdual_trace.summary() + "\n";
  out += selfdual_transpose.summary() + "\n";
  return out + note() + "\n";
}

EndHopfReport end_hopf_check(const FiniteHopfData& h) {
  const auto e = end_hopf(h);
  const std::size_t n = h.rank();
  const auto basis = matrix_unit_basis(n);
  const std::string bounds = "units=" + std::to_string(basis.size());
  const LinearMap<MatrixUnit> s = [&h, n](const MatrixUnit& u) {
    return matrix_units_of(
        end_antipode(h, Endo::unit_matrix(n, u.row, u.col)));
  };
  EndHopfReport out;
  out.group = h.name();
  out.laws.push_back(check_assoc(e, basis, bounds));
  out.laws.push_back(check_coassoc(e, basis, bounds));
  out.laws.push_back(check_bialgebra(e, basis, bounds));
  out.laws.push_back(check_antipode(e, basis, bounds, s));

  PairingStructure<MatrixUnit> trace_pair{
      [](const MatrixUnit& a, const MatrixUnit& b) {
        return Coeff(b.col == a.row && b.row == a.col ? 1 : 0);
      },
      [](const MatrixUnit& a) { return MatrixUnit{a.col, a.row}; }};
  PairingStructure<MatrixUnit> transpose_pair{
      [](const MatrixUnit& a, const MatrixUnit& b) {
        return Coeff(a == b ? 1 : 0);
      },
      [](const MatrixUnit& a) { return a; }};
  out.selfdual_trace = check_selfdual(e, trace_pair, basis, basis, bounds);
  out.selfdual_trace.check = "selfdual-trace";
  out.selfdual_transpose = check_selfdual(e, transpose_pair, basis, basis, bounds);
  out.selfdual_transpose.check = "selfdual-transpose";
  return out;
}

std::optional<NondistributiveWitness> find_nondistributive(
    const FiniteHopfData& h) {
  const std::size_t n = h.rank();
  const auto units = matrix_unit_basis(n);
  auto as_endo = [n](const MatrixUnit& e) {
    return Endo::unit_matrix(n, e.row, e.col);
  };
  for (const auto& f : units) {
    const Endo ef = as_endo(f);
    for (const auto& g : units) {
      const Endo eg = as_endo(g);
      for (const auto& k : units) {
        const Endo ek = as_endo(k);
        Endo lhs = ef * end_conv(h, eg, ek);
        Endo rhs = end_conv(h, ef * eg, ef * ek);
        if (lhs != rhs) {
          return NondistributiveWitness{f, g, k, std::move(lhs), std::move(rhs)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace whopf
