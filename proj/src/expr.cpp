#include "whopf/expr.hpp"

#include <cctype>
#include <limits>

namespace whopf {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Expr parse() {
    Expr e;
    skip();
    if (peek() == '0') {
      ++pos_;
      skip();
      if (pos_ == s_.size()) {
        return e;
      }
      pos_ = 0;
      skip();
    }
    bool negative = accept('-');
    for (;;) {
      Term t = term();
      if (negative) {
        t.coeff = -t.coeff;
      }
      if (!e.terms.empty() && t.factors.size() != e.terms.front().factors.size()) {
        fail("terms have different numbers of tensor factors");
      }
      e.terms.push_back(std::move(t));
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    expect_end();
    return e;
  }

 private:
  Term term() {
    Term t;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      Coeff c = integer();
      if (c == 0) {
        pos_ = start;
        fail("zero coefficient");
      }
      t.coeff = c;
      if (accept('*')) {
        t.factors.push_back(factor());
      } else {
        // a bare integer is a multiple of the unit
        t.factors.push_back(Atom{});
      }
    } else {
      t.factors.push_back(factor());
    }
    while (accept_token("(x)")) {
      t.factors.push_back(factor());
    }
    return t;
  }

  Atom factor() {
    Atom a;
    const char c = peek();
    if (c == '1') {
      ++pos_;
      skip();
      a.kind = Atom::Kind::Unit;
    } else if (c == '[') {
      a.kind = Atom::Kind::Word;
      a.word = word();
    } else if (c == 'Z') {
      ++pos_;
      skip();
      a.kind = Atom::Kind::NSymm;
      a.word = word();
    } else if (c == '{') {
      ++pos_;
      skip();
      a.kind = Atom::Kind::Subst;
      a.word = word();
      expect('/');
      a.bottom = word();
      expect('}');
    } else {
      fail("expected a basis literal");
    }
    return a;
  }

  Word word() {
    expect('[');
    std::vector<Letter> letters;
    if (!accept(']')) {
      do {
        const Coeff v = integer();
        if (v < 1 || v > std::numeric_limits<Letter>::max()) {
          fail("letters must be positive integers");
        }
        letters.push_back(static_cast<Letter>(v));
      } while (accept(','));
      expect(']');
    }
    return Word(std::move(letters));
  }

  Coeff integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected an integer");
    }
    Coeff v(s_.substr(start, pos_ - start));
    skip();
    return v;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  void skip() {
    while (std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  bool accept(char c) {
    if (peek() != c) {
      return false;
    }
    ++pos_;
    skip();
    return true;
  }
  bool accept_token(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) != 0) {
      return false;
    }
    pos_ += tok.size();
    skip();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }
  void expect_end() {
    if (pos_ != s_.size()) {
      fail("unexpected trailing input");
    }
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" +
                     s_ + "\"");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string describe(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Unit:
      return "1";
    case Atom::Kind::Word:
      return to_string(a.word);
    case Atom::Kind::NSymm:
      return "Z" + to_string(a.word);
    case Atom::Kind::Subst:
      return "{" + to_string(a.word) + "/" + to_string(a.bottom) + "}";
  }
  return "?";
}

Word atom_word(const Atom& a, const char* algebra) {
  switch (a.kind) {
    case Atom::Kind::Unit:
      return Word{};
    case Atom::Kind::Word:
      return a.word;
    default:
      throw AlgebraMismatch(describe(a) + " is not an element of " + algebra);
  }
}

PermWord atom_perm(const Atom& a) { return PermWord(atom_word(a, "mpr")); }

NSymmMonomial atom_nsymm(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Unit:
      return NSymmMonomial{};
    case Atom::Kind::NSymm:
      return NSymmMonomial{a.word};
    default:
      throw AlgebraMismatch(describe(a) + " is not an element of nsymm");
  }
}

Substitution atom_subst(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Unit:
      return Substitution{};
    case Atom::Kind::Subst:
      return canonicalize(a.word, a.bottom);
    default:
      throw AlgebraMismatch(describe(a) + " is not an element of dwha");
  }
}

}  // namespace whopf
