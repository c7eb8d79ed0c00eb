#pragma once

// Structure maps of a Hopf algebra with a distinguished basis, the generic
// convolution and antipode, and exhaustive axiom checkers.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "whopf/lincomb.hpp"

namespace whopf {

template <class B>
using Tensor2 = Tensor<B, B>;
template <class B>
using Tensor3 = Tensor<B, Tensor<B, B>>;

template <class B>
struct HopfStructure {
  std::string name;
  std::function<LinComb<B>(const B&, const B&)> product;
  std::function<LinComb<Tensor2<B>>(const B&)> coproduct;
  /// e(1). A single basis element for every connected graded algebra here;
  /// a general combination for End(H).
  LinComb<B> unit;
  std::function<Coeff(const B&)> counit;
  /// Empty for ungraded structures.
  std::function<std::size_t(const B&)> degree;
  std::function<std::string(const B&)> format;

  const B& unit_basis() const {
    if (unit.size() != 1 || unit.begin()->second != 1) {
      throw std::logic_error(name + ": unit is not a single basis element");
    }
    return unit.begin()->first;
  }
};

/// Bilinear form on basis elements. `dual`, when set, returns the unique basis
/// element pairing to 1 with its argument (all pairings here are of that kind).
template <class B>
struct PairingStructure {
  std::function<Coeff(const B&, const B&)> pair;
  std::function<B(const B&)> dual;
};

template <class B>
using LinearMap = std::function<LinComb<B>(const B&)>;

template <class B>
LinComb<B> multiply(const HopfStructure<B>& h, const LinComb<B>& x,
                    const LinComb<B>& y) {
  return lift2(h.product, x, y);
}

template <class B>
LinComb<Tensor2<B>> comultiply(const HopfStructure<B>& h, const LinComb<B>& x) {
  return lift(h.coproduct, x);
}

/// Product in the tensor-square algebra: (a (x) b)(c (x) d) = ac (x) bd.
template <class B>
LinComb<Tensor2<B>> multiply_tensor(const HopfStructure<B>& h,
                                    const LinComb<Tensor2<B>>& x,
                                    const LinComb<Tensor2<B>>& y) {
  return lift2(
      [&](const Tensor2<B>& s, const Tensor2<B>& t) {
        return tensor(h.product(s.left, t.left), h.product(s.right, t.right));
      },
      x, y);
}

template <class B>
Coeff counit_of(const HopfStructure<B>& h, const LinComb<B>& x) {
  Coeff out = 0;
  for (const auto& [b, c] : x) {
    out += c * h.counit(b);
  }
  return out;
}

/// m o (f (x) g) o mu, applied to a basis element.
template <class B, class F, class G>
LinComb<B> convolution(const HopfStructure<B>& h, F&& f, G&& g, const B& x) {
  LinComb<B> out;
  for (const auto& [t, c] : h.coproduct(x)) {
    out.add(multiply(h, f(t.left), g(t.right)), c);
  }
  return out;
}

/// The composite H -> Z -> H, the identity for convolution.
template <class B>
LinComb<B> unit_counit(const HopfStructure<B>& h, const B& x) {
  Coeff e = h.counit(x);
  LinComb<B> out = h.unit;
  out *= e;
  return out;
}

/// Antipode of a connected graded bialgebra by recursion on degree, memoized
/// per basis element. Terms x' (x) x'' of mu(x) other than x (x) 1 have
/// deg x' < deg x, and conv(S, id) = e o eps forces
/// S(x) = -sum S(x') x'' over those terms.
template <class B>
class Antipode {
 public:
  explicit Antipode(const HopfStructure<B>& h) : h_(&h) {}

  const LinComb<B>& operator()(const B& x) {
    if (auto it = memo_.find(x); it != memo_.end()) {
      return it->second;
    }
    LinComb<B> value = compute(x);
    return memo_.emplace(x, std::move(value)).first->second;
  }

  LinComb<B> apply(const LinComb<B>& x) {
    return lift([this](const B& b) { return (*this)(b); }, x);
  }

 private:
  LinComb<B> compute(const B& x) {
    const B& one = h_->unit_basis();
    if (x == one) {
      return LinComb<B>(one);
    }
    const std::size_t d = h_->degree(x);
    LinComb<B> sum;
    bool seen_self = false;
    for (const auto& [t, c] : h_->coproduct(x)) {
      if (t.left == x) {
        if (!(t.right == one) || c != 1) {
          throw std::logic_error(h_->name + ": coproduct is not connected at " +
                                 h_->format(x));
        }
        seen_self = true;
        continue;
      }
      if (h_->degree(t.left) >= d) {
        throw std::logic_error(h_->name + ": coproduct term does not lower degree");
      }
      sum.add(multiply(*h_, (*this)(t.left), LinComb<B>(t.right)), c);
    }
    if (!seen_self) {
      throw std::logic_error(h_->name + ": coproduct lacks x (x) 1 term");
    }
    return -sum;
  }

  const HopfStructure<B>* h_;
  std::map<B, LinComb<B>> memo_;
};

template <class B>
LinComb<B> antipode(const HopfStructure<B>& h, const B& x) {
  Antipode<B> s(h);
  return s(x);
}

// ---------------------------------------------------------------------------
// Reports

struct Violation {
  std::string law;
  std::string elements;
  std::string lhs;
  std::string rhs;

  std::string to_string() const {
    return "VIOLATION " + law + " " + elements + " lhs=" + lhs + " rhs=" + rhs;
  }
};

struct Report {
  std::string check;
  std::string algebra;
  std::string bounds;
  std::vector<Violation> violations;
  std::size_t cases = 0;

  bool passed() const { return violations.empty(); }

  std::string summary() const {
    return "CHECK " + check + " " + algebra + " " + bounds + " " +
           (passed() ? "PASS" : "FAIL") + " " +
           std::to_string(violations.size());
  }

  /// Violation lines followed by the summary line.
  std::string to_string(std::size_t max_violations = 20) const {
    std::string out;
    for (std::size_t i = 0; i < violations.size() && i < max_violations; ++i) {
      out += violations[i].to_string() + "\n";
    }
    return out + summary() + "\n";
  }
};

namespace detail {

template <class B>
struct Formatters {
  const HopfStructure<B>& h;

  std::string one(const B& b) const { return h.format(b); }
  std::string two(const Tensor2<B>& t) const {
    return h.format(t.left) + " (x) " + h.format(t.right);
  }
  std::string three(const Tensor3<B>& t) const {
    return h.format(t.left) + " (x) " + h.format(t.right.left) + " (x) " +
           h.format(t.right.right);
  }
  std::string lc(const LinComb<B>& x) const {
    return format_lincomb(x, [this](const B& b) { return one(b); });
  }
  std::string lc2(const LinComb<Tensor2<B>>& x) const {
    return format_lincomb(x, [this](const Tensor2<B>& t) { return two(t); });
  }
  std::string lc3(const LinComb<Tensor3<B>>& x) const {
    return format_lincomb(x, [this](const Tensor3<B>& t) { return three(t); });
  }
};

}  // namespace detail

/// Degree homogeneity of product and coproduct, and connectedness: the unit is
/// the only enumerated basis element of degree 0.
template <class B>
Report check_grading(const HopfStructure<B>& h, const std::vector<B>& basis,
                     const std::string& bounds) {
  Report r{"grading", h.name, bounds, {}, 0};
  detail::Formatters<B> f{h};
  const B& one = h.unit_basis();
  if (h.degree(one) != 0) {
    r.violations.push_back({"unit-degree", f.one(one),
                            std::to_string(h.degree(one)), "0"});
  }
  for (const B& a : basis) {
    ++r.cases;
    if (h.degree(a) == 0 && !(a == one)) {
      r.violations.push_back({"connected", f.one(a), "deg=0", "unit only"});
    }
    for (const auto& [t, c] : h.coproduct(a)) {
      if (h.degree(t.left) + h.degree(t.right) != h.degree(a)) {
        r.violations.push_back({"coproduct-degree", f.one(a), f.two(t),
                                std::to_string(h.degree(a))});
      }
    }
    for (const B& b : basis) {
      for (const auto& [t, c] : h.product(a, b)) {
        if (h.degree(t) != h.degree(a) + h.degree(b)) {
          r.violations.push_back({"product-degree", f.one(a) + "," + f.one(b),
                                  f.one(t),
                                  std::to_string(h.degree(a) + h.degree(b))});
        }
      }
    }
  }
  return r;
}

/// Associativity and unit laws. Triples are restricted to total degree at
/// most max_degree when the structure is graded; pass SIZE_MAX for all.
template <class B>
Report check_assoc(const HopfStructure<B>& h, const std::vector<B>& basis,
                   const std::string& bounds,
                   std::size_t max_degree = static_cast<std::size_t>(-1)) {
  Report r{"assoc", h.name, bounds, {}, 0};
  detail::Formatters<B> f{h};
  for (const B& a : basis) {
    LinComb<B> la(a);
    auto left_unit = multiply(h, h.unit, la);
    auto right_unit = multiply(h, la, h.unit);
    if (left_unit != la) {
      r.violations.push_back({"left-unit", f.one(a), f.lc(left_unit), f.lc(la)});
    }
    if (right_unit != la) {
      r.violations.push_back(
          {"right-unit", f.one(a), f.lc(right_unit), f.lc(la)});
    }
    for (const B& b : basis) {
      if (h.degree && h.degree(a) + h.degree(b) > max_degree) {
        continue;
      }
      auto ab = h.product(a, b);
      for (const B& c : basis) {
        if (h.degree && h.degree(a) + h.degree(b) + h.degree(c) > max_degree) {
          continue;
        }
        ++r.cases;
        auto lhs = multiply(h, ab, LinComb<B>(c));
        auto rhs = multiply(h, la, h.product(b, c));
        if (lhs != rhs) {
          r.violations.push_back({"associativity",
                                  f.one(a) + "," + f.one(b) + "," + f.one(c),
                                  f.lc(lhs), f.lc(rhs)});
        }
      }
    }
  }
  return r;
}

/// (id (x) mu) mu = (mu (x) id) mu and both counit laws, per basis element.
template <class B>
Report check_coassoc(const HopfStructure<B>& h, const std::vector<B>& basis,
                     const std::string& bounds) {
  Report r{"coassoc", h.name, bounds, {}, 0};
  detail::Formatters<B> f{h};
  for (const B& x : basis) {
    ++r.cases;
    LinComb<Tensor2<B>> m = h.coproduct(x);
    LinComb<Tensor3<B>> right;  // (id (x) mu) mu
    LinComb<Tensor3<B>> left;   // (mu (x) id) mu, reassociated
    for (const auto& [t, c] : m) {
      for (const auto& [u, d] : h.coproduct(t.right)) {
        right.add(Tensor3<B>{t.left, {u.left, u.right}}, c * d);
      }
      for (const auto& [u, d] : h.coproduct(t.left)) {
        left.add(Tensor3<B>{u.left, {u.right, t.right}}, c * d);
      }
    }
    if (left != right) {
      r.violations.push_back(
          {"coassociativity", f.one(x), f.lc3(left), f.lc3(right)});
    }
    LinComb<B> lx(x);
    LinComb<B> eps_id;
    LinComb<B> id_eps;
    for (const auto& [t, c] : m) {
      eps_id.add(t.right, c * h.counit(t.left));
      id_eps.add(t.left, c * h.counit(t.right));
    }
    if (eps_id != lx) {
      r.violations.push_back({"left-counit", f.one(x), f.lc(eps_id), f.lc(lx)});
    }
    if (id_eps != lx) {
      r.violations.push_back(
          {"right-counit", f.one(x), f.lc(id_eps), f.lc(lx)});
    }
  }
  return r;
}

/// mu(ab) = mu(a) mu(b) in the tensor-square algebra, eps(ab) = eps(a)eps(b),
/// mu(1) = 1 (x) 1 and eps(1) = 1.
template <class B>
Report check_bialgebra(const HopfStructure<B>& h, const std::vector<B>& basis,
                       const std::string& bounds) {
  Report r{"bialgebra", h.name, bounds, {}, 0};
  detail::Formatters<B> f{h};
  auto mu_unit = comultiply(h, h.unit);
  auto unit_unit = tensor(h.unit, h.unit);
  if (mu_unit != unit_unit) {
    r.violations.push_back(
        {"unit-coproduct", "1", f.lc2(mu_unit), f.lc2(unit_unit)});
  }
  if (counit_of(h, h.unit) != 1) {
    r.violations.push_back(
        {"unit-counit", "1", counit_of(h, h.unit).str(), "1"});
  }
  std::map<B, LinComb<Tensor2<B>>> mu_cache;
  auto mu = [&](const B& b) -> const LinComb<Tensor2<B>>& {
    auto it = mu_cache.find(b);
    if (it == mu_cache.end()) {
      it = mu_cache.emplace(b, h.coproduct(b)).first;
    }
    return it->second;
  };
  for (const B& a : basis) {
    for (const B& b : basis) {
      ++r.cases;
      auto ab = h.product(a, b);
      auto lhs = comultiply(h, ab);
      auto rhs = multiply_tensor(h, mu(a), mu(b));
      const std::string pair = f.one(a) + "," + f.one(b);
      if (lhs != rhs) {
        r.violations.push_back({"hopf-property", pair, f.lc2(lhs), f.lc2(rhs)});
      }
      Coeff el = counit_of(h, ab);
      Coeff er = h.counit(a) * h.counit(b);
      if (el != er) {
        r.violations.push_back({"counit-multiplicative", pair, el.str(), er.str()});
      }
    }
  }
  return r;
}

/// conv(id, S) = conv(S, id) = e o eps on every basis element.
template <class B>
Report check_antipode(const HopfStructure<B>& h, const std::vector<B>& basis,
                      const std::string& bounds, const LinearMap<B>& s) {
  Report r{"antipode", h.name, bounds, {}, 0};
  detail::Formatters<B> f{h};
  auto id = [](const B& b) { return LinComb<B>(b); };
  for (const B& x : basis) {
    ++r.cases;
    auto target = unit_counit(h, x);
    auto left = convolution(h, id, s, x);
    auto right = convolution(h, s, id, x);
    if (left != target) {
      r.violations.push_back(
          {"conv(id,S)", f.one(x), f.lc(left), f.lc(target)});
    }
    if (right != target) {
      r.violations.push_back(
          {"conv(S,id)", f.one(x), f.lc(right), f.lc(target)});
    }
  }
  return r;
}

/// Antipode check using the degree recursion.
template <class B>
Report check_antipode(const HopfStructure<B>& h, const std::vector<B>& basis,
                      const std::string& bounds) {
  auto s = std::make_shared<Antipode<B>>(h);
  return check_antipode(h, basis, bounds,
                        LinearMap<B>([s](const B& b) { return (*s)(b); }));
}

template <class B>
Coeff pair_lc(const PairingStructure<B>& p, const LinComb<B>& x, const B& y) {
  Coeff out = 0;
  for (const auto& [b, c] : x) {
    out += c * p.pair(b, y);
  }
  return out;
}

/// <m(a (x) b), c> = <a (x) b, mu(c)> with the tensor pairing taken factorwise.
/// a, b range over `factors`; c ranges over `targets` together with the duals
/// of every term of m(a (x) b), so any nonzero left side is always examined.
template <class B>
Report check_selfdual(const HopfStructure<B>& h, const PairingStructure<B>& p,
                      const std::vector<B>& factors,
                      const std::vector<B>& targets,
                      const std::string& bounds) {
  Report r{"selfdual", h.name, bounds, {}, 0};
  detail::Formatters<B> f{h};
  std::map<B, LinComb<Tensor2<B>>> mu_cache;
  auto mu = [&](const B& b) -> const LinComb<Tensor2<B>>& {
    auto it = mu_cache.find(b);
    if (it == mu_cache.end()) {
      it = mu_cache.emplace(b, h.coproduct(b)).first;
    }
    return it->second;
  };
  for (const B& a : factors) {
    for (const B& b : factors) {
      auto ab = h.product(a, b);
      std::vector<B> cs = targets;
      if (p.dual) {
        for (const auto& [t, c] : ab) {
          cs.push_back(p.dual(t));
        }
      }
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      for (const B& c : cs) {
        ++r.cases;
        Coeff lhs = pair_lc(p, ab, c);
        Coeff rhs = 0;
        for (const auto& [t, k] : mu(c)) {
          rhs += k * p.pair(a, t.left) * p.pair(b, t.right);
        }
        if (lhs != rhs) {
          r.violations.push_back({"adjointness",
                                  f.one(a) + "," + f.one(b) + "," + f.one(c),
                                  lhs.str(), rhs.str()});
        }
      }
    }
  }
  return r;
}

}  // namespace whopf
