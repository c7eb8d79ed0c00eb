#pragma once

// Free Z-modules over an arbitrary ordered basis type.

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace whopf {

using Coeff = boost::multiprecision::cpp_int;

template <class L, class R>
struct Tensor {
  L left;
  R right;

  friend auto operator<=>(const Tensor&, const Tensor&) = default;
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

template <class L, class R>
Tensor(L, R) -> Tensor<L, R>;

/// A finite Z-linear combination of basis elements. No stored coefficient is
/// ever zero, so the zero element is the empty map and equality is termwise.
template <class B>
class LinComb {
 public:
  using basis_type = B;
  using container = std::map<B, Coeff>;
  using const_iterator = typename container::const_iterator;

  LinComb() = default;
  explicit LinComb(B b, Coeff c = 1) { add(std::move(b), std::move(c)); }

  void add(B b, const Coeff& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(b), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  void add(const LinComb& other, const Coeff& c = 1) {
    if (c == 0) {
      return;
    }
    for (const auto& [b, v] : other.terms_) {
      add(b, v * c);
    }
  }

  Coeff coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  /// Sum of all coefficients; for shuffles this is the number of interleavings.
  Coeff mass() const {
    Coeff total = 0;
    for (const auto& [b, v] : terms_) {
      total += v;
    }
    return total;
  }

  LinComb& operator+=(const LinComb& o) {
    add(o, 1);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, -1);
    return *this;
  }
  LinComb& operator*=(const Coeff& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [b, v] : terms_) {
        v *= c;
      }
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend LinComb operator*(const Coeff& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  container terms_;
};

template <class T>
struct is_lincomb : std::false_type {};
template <class B>
struct is_lincomb<LinComb<B>> : std::true_type {};

/// a + c*b
template <class B>
LinComb<B> combine(const LinComb<B>& a, const Coeff& c, const LinComb<B>& b) {
  LinComb<B> out = a;
  out.add(b, c);
  return out;
}

template <class B1, class B2>
LinComb<Tensor<B1, B2>> tensor(const LinComb<B1>& a, const LinComb<B2>& b) {
  LinComb<Tensor<B1, B2>> out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      out.add(Tensor<B1, B2>{x, y}, cx * cy);
    }
  }
  return out;
}

/// Linear extension of a basis-level map B -> LinComb<C>.
template <class F, class B>
auto lift(F&& f, const LinComb<B>& x) {
  using R = std::decay_t<std::invoke_result_t<F&, const B&>>;
  static_assert(is_lincomb<R>::value, "lift needs a map into a LinComb");
  R out;
  for (const auto& [b, c] : x) {
    out.add(f(b), c);
  }
  return out;
}

/// Bilinear extension of a basis-level map (A, B) -> LinComb<C>.
template <class F, class A, class B>
auto lift2(F&& f, const LinComb<A>& x, const LinComb<B>& y) {
  using R = std::decay_t<std::invoke_result_t<F&, const A&, const B&>>;
  static_assert(is_lincomb<R>::value, "lift2 needs a map into a LinComb");
  R out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      out.add(f(a, b), ca * cb);
    }
  }
  return out;
}

/// (f (x) g) applied to an element of a tensor product.
template <class F, class G, class A, class B>
auto tensor_map(F&& f, G&& g, const LinComb<Tensor<A, B>>& x) {
  using RL = std::decay_t<std::invoke_result_t<F&, const A&>>;
  using RR = std::decay_t<std::invoke_result_t<G&, const B&>>;
  LinComb<Tensor<typename RL::basis_type, typename RR::basis_type>> out;
  for (const auto& [t, c] : x) {
    out.add(tensor(f(t.left), g(t.right)), c);
  }
  return out;
}

/// Renders a combination as `c*b + ... - b`, terms sorted by their rendered
/// basis string. Coefficient 1 is omitted; zero renders as `0`.
template <class B, class Fmt>
std::string format_lincomb(const LinComb<B>& x, const Fmt& fmt) {
  if (x.is_zero()) {
    return "0";
  }
  std::vector<std::pair<std::string, Coeff>> rows;
  rows.reserve(x.size());
  for (const auto& [b, c] : x) {
    rows.emplace_back(fmt(b), c);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::string out;
  bool first = true;
  for (const auto& [s, c] : rows) {
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) {
        out += "-";
      }
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) {
      out += mag.str() + "*";
    }
    out += s;
    first = false;
  }
  return out;
}

}  // namespace whopf
