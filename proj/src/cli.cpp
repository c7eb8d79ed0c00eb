#include "whopf/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "whopf/base_algebras.hpp"
#include "whopf/dwha.hpp"
#include "whopf/endo.hpp"
#include "whopf/expr.hpp"
#include "whopf/mpr.hpp"
#include "whopf/wha.hpp"

namespace whopf {

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kPrecondition = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class B>
struct Algebra {
  HopfStructure<B> h;
  std::function<B(const Atom&)> conv;
  std::optional<PairingStructure<B>> pairing;
};

template <class F>
decltype(auto) with_algebra(const std::string& name, F&& f) {
  if (name == "shuffle") {
    return f(Algebra<Word>{shuffle_hopf(),
                           [](const Atom& a) { return atom_word(a, "shuffle"); },
                           std::nullopt});
  }
  if (name == "wha") {
    return f(Algebra<Word>{wha_hopf(),
                           [](const Atom& a) { return atom_word(a, "wha"); },
                           std::nullopt});
  }
  if (name == "nsymm") {
    return f(Algebra<NSymmMonomial>{nsymm_hopf(), atom_nsymm, std::nullopt});
  }
  if (name == "mpr") {
    return f(Algebra<PermWord>{mpr_hopf(), atom_perm, mpr_pairing()});
  }
  if (name == "dwha") {
    return f(Algebra<Substitution>{dwha_hopf(), atom_subst, dwha_pairing()});
  }
  throw UsageError("unknown algebra: " + name);
}

template <class B, class Fmt>
void emit(std::ostream& out, const LinComb<B>& x, const Fmt& fmt, bool json) {
  if (!json) {
    out << format_lincomb(x, fmt) << "\n";
    return;
  }
  std::vector<std::pair<std::string, Coeff>> rows;
  for (const auto& [b, c] : x) {
    rows.emplace_back(fmt(b), c);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, c] : rows) {
    terms.push_back({{"coeff", c.str()}, {"basis", s}});
  }
  out << nlohmann::json{{"terms", terms}}.dump() << "\n";
}

void emit_scalar(std::ostream& out, const Coeff& c, bool json) {
  if (json) {
    out << nlohmann::json{{"value", c.str()}}.dump() << "\n";
  } else {
    out << c.str() << "\n";
  }
}

template <class B>
auto formatter2(const HopfStructure<B>& h) {
  return [&h](const Tensor2<B>& t) {
    return h.format(t.left) + " (x) " + h.format(t.right);
  };
}

std::string plain(const Word& w) { return to_string(w); }
std::string plain_subst(const Substitution& s) {
  return s.empty() ? std::string("1") : to_string(s);
}

// ---------------------------------------------------------------------------
// verify

struct Bounds {
  int max_weight = -1;
  int max_len = -1;
  int max_height = -1;
  int max_support = -1;
  int max_top = -1;
  int max_bottom = -1;
};

std::size_t pick(int given, std::size_t fallback) {
  return given < 0 ? fallback : static_cast<std::size_t>(given);
}

template <class B>
bool run_laws(std::ostream& out, const HopfStructure<B>& h,
              const std::vector<B>& basis, const std::string& bounds,
              std::vector<Report> extra = {}) {
  std::size_t top = 0;
  for (const B& b : basis) {
    top = std::max(top, h.degree(b));
  }
  std::vector<Report> reports;
  reports.push_back(check_grading(h, basis, bounds));
  reports.push_back(check_assoc(h, basis, bounds, top));
  reports.push_back(check_coassoc(h, basis, bounds));
  reports.push_back(check_bialgebra(h, basis, bounds));
  reports.push_back(check_antipode(h, basis, bounds));
  for (auto& r : extra) {
    reports.push_back(std::move(r));
  }
  bool ok = true;
  for (const Report& r : reports) {
    out << r.to_string();
    ok = ok && r.passed();
  }
  return ok;
}

bool verify_algebra(std::ostream& out, const std::string& name, const Bounds& b) {
  if (name == "shuffle" || name == "nsymm") {
    const std::size_t w = pick(b.max_weight, name == "shuffle" ? 5 : 4);
    const std::string bounds = "weight<=" + std::to_string(w);
    if (name == "shuffle") {
      return run_laws(out, shuffle_hopf(), compositions_up_to(w), bounds);
    }
    return run_laws(out, nsymm_hopf(), nsymm_monomials_up_to(w), bounds);
  }
  if (name == "mpr") {
    const std::size_t len = pick(b.max_len, 4);
    const std::size_t factor_len = std::min<std::size_t>(len, 3);
    const auto h = mpr_hopf();
    const std::string bounds = "len<=" + std::to_string(len);
    std::vector<Report> extra;
    extra.push_back(check_selfdual(h, mpr_pairing(), permutations_up_to(factor_len),
                                   permutations_up_to(len),
                                   "factors<=" + std::to_string(factor_len) +
                                       ",targets<=" + std::to_string(len)));
    return run_laws(out, h, permutations_up_to(len), bounds, std::move(extra));
  }
  if (name == "wha") {
    const std::size_t len = pick(b.max_len, 3);
    const auto height = static_cast<Letter>(pick(b.max_height, 3));
    return run_laws(out, wha_hopf(), words_up_to(len, height),
                    "len<=" + std::to_string(len) +
                        ",height<=" + std::to_string(height));
  }
  if (name == "dwha") {
    const std::size_t k = pick(b.max_support, 2);
    const std::size_t t = pick(b.max_top, 3);
    const std::size_t bo = pick(b.max_bottom, 3);
    const auto basis = enumerate_substitutions(k, t, bo);
    const auto h = dwha_hopf();
    const std::string bounds = "support<=" + std::to_string(k) +
                               ",top<=" + std::to_string(t) +
                               ",bottom<=" + std::to_string(bo);
    std::vector<Report> extra;
    extra.push_back(check_selfdual(h, dwha_pairing(), basis, basis, bounds));
    return run_laws(out, h, basis, bounds, std::move(extra));
  }
  throw UsageError("unknown algebra: " + name);
}

FiniteHopfData load_group(const std::string& source) {
  GroupTable table;
  try {
    table = builtin_group_table(source);
  } catch (const std::invalid_argument&) {
    if (!std::filesystem::is_regular_file(source)) {
      throw UsageError("not a built-in group or readable file: " + source);
    }
    std::ifstream in(source);
    std::stringstream text;
    text << in.rdbuf();
    try {
      table = parse_group_table(text.str());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  const std::string name = std::filesystem::path(source).filename().string();
  return finite_hopf_group_algebra(name, table);
}

bool verify_end(std::ostream& out, const std::string& source) {
  const FiniteHopfData h = load_group(source);
  const EndHopfReport r = end_hopf_check(h);
  out << r.to_string();
  if (auto w = find_nondistributive(h)) {
    out << "NOTE nondistributive f=" << to_string(w->f) << " g=" << to_string(w->g)
        << " h=" << to_string(w->h) << "\n";
  }
  return r.structural_pass();
}

bool verify_naive(std::ostream& out, std::size_t len, Letter height) {
  const std::string bounds =
      "len<=" + std::to_string(len) + ",height<=" + std::to_string(height);
  auto v = find_naive_failure(len, height);
  if (v) {
    out << v->to_string() << "\n";
  }
  out << "CHECK naive-failure naive " << bounds << " "
      << (v ? "REPRODUCED" : "NOT-REPRODUCED") << "\n";
  return v.has_value();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact arithmetic in combinatorial Hopf algebras over Z",
               "wordhopf"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit results as JSON");

  std::string algebra;
  // Separate string slots: a vector option would treat "[1,2]" as a list.
  std::vector<std::string> args(2);
  auto with_args = [&](CLI::App* sub, std::size_t n, const std::string& what) {
    sub->add_option("first", args[0], what)->required();
    if (n > 1) {
      sub->add_option("second", args[1], what)->required();
    }
    return sub;
  };
  auto algebra_option = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--algebra,-a", algebra, "Algebra")
        ->required()
        ->check(CLI::IsMember(choices));
  };
  const std::vector<std::string> all{"shuffle", "nsymm", "mpr", "wha", "dwha"};

  auto* mul = with_args(app.add_subcommand("mul", "Product of two elements"), 2,
                        "Two elements");
  algebra_option(mul, all);
  auto* comul = with_args(app.add_subcommand("comul", "Coproduct"), 1, "Element");
  algebra_option(comul, all);
  auto* anti = with_args(app.add_subcommand("antipode", "Antipode"), 1, "Element");
  algebra_option(anti, all);
  auto* pair = with_args(app.add_subcommand("pair", "Self-duality pairing"), 2,
                         "Two elements");
  algebra_option(pair, {"mpr", "dwha"});
  auto* embed_cmd = with_args(
      app.add_subcommand("embed", "Permutations into substitutions"), 1,
      "Element of mpr");
  auto* encode_cmd = with_args(
      app.add_subcommand("encode", "Words into substitutions"), 1, "Element of wha");
  auto* decode_cmd = with_args(
      app.add_subcommand("decode", "Substitutions in run form back to words"), 1,
      "Element of dwha");
  auto* compose = with_args(
      app.add_subcommand("compose", "Composition of endomorphism recipes"), 2,
      "Two elements");
  algebra_option(compose, {"mpr", "dwha"});
  std::string kind;
  auto* act_cmd = with_args(
      app.add_subcommand("act", "Apply an endomorphism recipe to a word"), 2,
      "Recipe and element of shuffle");
  act_cmd->add_option("--kind,-k", kind, "perm, subst or naive")
      ->required()
      ->check(CLI::IsMember({"perm", "subst", "naive"}));

  auto* verify = app.add_subcommand("verify", "Exhaustive axiom checks");
  Bounds bounds;
  std::string verify_algebra_name;
  std::vector<std::string> end_h;
  bool naive_failure = false;
  bool verify_all = false;
  verify->add_option("--algebra,-a", verify_algebra_name, "Algebra")
      ->check(CLI::IsMember(all));
  verify->add_option("--max-weight", bounds.max_weight)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-len", bounds.max_len)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-height", bounds.max_height)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-support", bounds.max_support)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-top", bounds.max_top)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-bottom", bounds.max_bottom)->check(CLI::NonNegativeNumber);
  verify->add_option("--end-h", end_h, "Built-in group (c1 c2 c3 c4 s3) or table file");
  verify->add_flag("--naive-failure", naive_failure,
                   "Reproduce the failure of the naive word construction");
  verify->add_flag("--all", verify_all, "Every suite with default bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (mul->parsed() || comul->parsed() || anti->parsed() || pair->parsed() ||
        compose->parsed()) {
      // Syntax errors take precedence over algebra errors in either operand.
      std::vector<Expr> exprs{parse_expr(args[0])};
      if (!comul->parsed() && !anti->parsed()) {
        exprs.push_back(parse_expr(args[1]));
      }
      return with_algebra(algebra, [&](const auto& alg) -> int {
        using B = std::decay_t<decltype(alg.conv(Atom{}))>;
        auto parse = [&](std::size_t i) {
          return to_lincomb<B>(exprs.at(i), alg.conv);
        };
        const HopfStructure<B>& h = alg.h;
        if (mul->parsed()) {
          emit(out, multiply(h, parse(0), parse(1)), h.format, json);
        } else if (comul->parsed()) {
          emit(out, comultiply(h, parse(0)), formatter2(h), json);
        } else if (anti->parsed()) {
          Antipode<B> s(h);
          emit(out, s.apply(parse(0)), h.format, json);
        } else if (pair->parsed()) {
          const auto x = parse(0);
          const auto y = parse(1);
          Coeff total = 0;
          for (const auto& [a, ca] : x) {
            for (const auto& [b, cb] : y) {
              total += ca * cb * alg.pairing->pair(a, b);
            }
          }
          emit_scalar(out, total, json);
        } else {
          if constexpr (std::is_same_v<B, PermWord>) {
            emit(out, lift2(mpr_compose, parse(0), parse(1)),
                 h.format, json);
          } else if constexpr (std::is_same_v<B, Substitution>) {
            emit(out, lift2(subst_compose, parse(0), parse(1)),
                 h.format, json);
          }
        }
        return kOk;
      });
    }
    if (embed_cmd->parsed()) {
      auto x = to_lincomb<PermWord>(parse_expr(args[0]), atom_perm);
      emit(out, lift([](const PermWord& p) { return LinComb<Substitution>(embed(p)); }, x),
           plain_subst, json);
      return kOk;
    }
    if (encode_cmd->parsed()) {
      auto x = to_lincomb<Word>(parse_expr(args[0]),
                                [](const Atom& a) { return atom_word(a, "wha"); });
      emit(out, lift([](const Word& w) { return LinComb<Substitution>(encode(w)); }, x),
           plain_subst, json);
      return kOk;
    }
    if (decode_cmd->parsed()) {
      auto x = to_lincomb<Substitution>(parse_expr(args[0]), atom_subst);
      emit(out, lift([](const Substitution& s) { return LinComb<Word>(decode(s)); }, x),
           plain, json);
      return kOk;
    }
    if (act_cmd->parsed()) {
      const Expr recipe = parse_expr(args[0]);
      if (recipe.terms.size() != 1 || recipe.terms.front().coeff != 1 ||
          recipe.arity() != 1) {
        throw AlgebraMismatch("the recipe must be a single basis element");
      }
      const Atom& atom = recipe.terms.front().factors.front();
      ActionKind k = PermAction{};
      if (kind == "perm") {
        k = PermAction{atom_perm(atom)};
      } else if (kind == "subst") {
        k = SubstAction{atom_subst(atom)};
      } else {
        k = NaiveWordAction{atom_word(atom, "naive")};
      }
      auto x = to_lincomb<Word>(parse_expr(args[1]),
                                [](const Atom& a) { return atom_word(a, "shuffle"); });
      emit(out, act(k, x), shuffle_hopf().format, json);
      return kOk;
    }
    if (verify->parsed()) {
      if (!verify_all && verify_algebra_name.empty() && end_h.empty() &&
          !naive_failure) {
        throw UsageError("verify needs --algebra, --end-h, --naive-failure or --all");
      }
      bool ok = true;
      if (verify_all) {
        for (const auto& name : all) {
          ok = verify_algebra(out, name, Bounds{}) && ok;
        }
        for (const char* g : {"c2", "c3", "s3"}) {
          ok = verify_end(out, g) && ok;
        }
        ok = verify_naive(out, 3, 3) && ok;
      }
      if (!verify_algebra_name.empty()) {
        ok = verify_algebra(out, verify_algebra_name, bounds) && ok;
      }
      for (const auto& g : end_h) {
        ok = verify_end(out, g) && ok;
      }
      if (naive_failure) {
        ok = verify_naive(out, pick(bounds.max_len, 3),
                          static_cast<Letter>(pick(bounds.max_height, 3))) &&
             ok;
      }
      out << "RESULT " << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? kOk : kFail;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  }
  return kUsage;
}

}  // namespace whopf
