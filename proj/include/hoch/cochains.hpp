#pragma once

// Cochains as evaluation rules on elementary tensors. The coboundary of a
// finitely supported table generally has infinite support, so every derived
// cochain is a lazily evaluated pullback rather than a table.

#include "hoch/homotopy.hpp"

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>

namespace hoch {

enum class Provenance { table, trace_power, pullback, combination };

template <Monomial M, typename S = Rational>
class Cochain {
public:
  using Rule = std::function<S(const ElementaryTensor<M> &)>;

  Cochain(int degree, Rule rule, Provenance provenance)
      : degree_(degree), rule_(std::make_shared<const Rule>(std::move(rule))),
        provenance_(provenance) {
    if (degree < 0)
      throw std::invalid_argument("cochain degree must be >= 0");
  }

  int degree() const noexcept { return degree_; }
  Provenance provenance() const noexcept { return provenance_; }

  S operator()(const ElementaryTensor<M> &x) const {
    if (x.degree() != degree_)
      throw std::invalid_argument("cochain evaluated on a tensor of the wrong degree");
    return (*rule_)(x);
  }

  /// Linear extension to chains.
  S operator()(const Chain<M, S> &x) const {
    S acc(0);
    for (const auto &[t, c] : x)
      acc += c * (*this)(t);
    return acc;
  }

private:
  int degree_;
  std::shared_ptr<const Rule> rule_;
  Provenance provenance_;
};

template <Monomial M, typename S>
S eval_cochain(const Cochain<M, S> &T, const Chain<M, S> &x) {
  return T(x);
}

/// Degree-0 cochain applied to an algebra element.
template <Monomial M, typename S>
S eval_functional(const Cochain<M, S> &T, const Element<M, S> &a) {
  return T(as_chain(a));
}

template <Monomial M, typename S = Rational>
Cochain<M, S> zero_cochain(int degree) {
  return Cochain<M, S>(degree, [](const ElementaryTensor<M> &) { return S(0); },
                       Provenance::table);
}

/// Finitely supported table; zero off its support.
template <Monomial M, typename S>
Cochain<M, S> table_cochain(int degree, std::map<ElementaryTensor<M>, S> table) {
  for (const auto &[t, c] : table)
    if (t.degree() != degree)
      throw std::invalid_argument("table entry has the wrong degree");
  auto data = std::make_shared<const std::map<ElementaryTensor<M>, S>>(std::move(table));
  return Cochain<M, S>(
      degree,
      [data](const ElementaryTensor<M> &x) {
        auto it = data->find(x);
        return it == data->end() ? S(0) : it->second;
      },
      Provenance::table);
}

/// T o F, where F maps tensors of `degree` to chains of degree T.degree().
template <Monomial M, typename S, typename Op>
Cochain<M, S> pullback(const Cochain<M, S> &T, int degree, Op op) {
  return Cochain<M, S>(
      degree, [T, op = std::move(op)](const ElementaryTensor<M> &x) { return T(op(x)); },
      Provenance::pullback);
}

/// (delta T)(x) = T(d x).
template <Monomial M, typename S>
Cochain<M, S> coboundary(const Cochain<M, S> &T) {
  return pullback(T, T.degree() + 1,
                  [](const ElementaryTensor<M> &x) { return boundary(chain_of<M, S>(x)); });
}

/// a T + b U.
template <Monomial M, typename S>
Cochain<M, S> combine(const S &a, const Cochain<M, S> &T, const S &b, const Cochain<M, S> &U) {
  if (T.degree() != U.degree())
    throw std::invalid_argument("combining cochains of different degrees");
  return Cochain<M, S>(
      T.degree(),
      [a, T, b, U](const ElementaryTensor<M> &x) {
        S v(0);
        if (a != 0)
          v += a * T(x);
        if (b != 0)
          v += b * U(x);
        return v;
      },
      Provenance::combination);
}

template <Monomial M, typename S>
Cochain<M, S> operator+(const Cochain<M, S> &T, const Cochain<M, S> &U) {
  return combine(S(1), T, S(1), U);
}
template <Monomial M, typename S>
Cochain<M, S> operator-(const Cochain<M, S> &T, const Cochain<M, S> &U) {
  return combine(S(1), T, S(-1), U);
}
template <Monomial M, typename S>
Cochain<M, S> operator*(const S &a, const Cochain<M, S> &T) {
  return combine(a, T, S(0), T);
}

/// Projection onto cyclic cochains: (1/(n+1)) sum_j T o t^j.
template <Monomial M, typename S>
Cochain<M, S> symmetrize_cochain(const Cochain<M, S> &T) {
  const int n = T.degree();
  return Cochain<M, S>(
      n,
      [T, n](const ElementaryTensor<M> &x) {
        auto orbit = chain_of<M, S>(x);
        S acc(0);
        for (int j = 0; j <= n; ++j) {
          acc += T(orbit);
          orbit = cyclic_shift(orbit);
        }
        return acc / S(n + 1);
      },
      Provenance::combination);
}

/// Diagonal trace: tau(p_b q_b) = lambda, zero elsewhere.
template <typename S = Rational>
Cochain<CuntzMonomial, S> trace_cuntz(S lambda) {
  return Cochain<CuntzMonomial, S>(
      0,
      [lambda](const ElementaryTensor<CuntzMonomial> &x) {
        return x[0].alpha == x[0].beta ? lambda : S(0);
      },
      Provenance::table);
}

/// tau^(n)(a_1 (x) ... (x) a_{n+1}) = tau(a_1 a_2 ... a_{n+1}) for a trace tau
/// and even n.
template <Monomial M, typename S>
Cochain<M, S> trace_power(const Cochain<M, S> &tau, int n) {
  if (tau.degree() != 0)
    throw std::invalid_argument("trace_power expects a degree-0 trace");
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("trace_power is defined for even degrees only");
  return Cochain<M, S>(
      n,
      [tau](const ElementaryTensor<M> &x) {
        M prod = x[0];
        for (std::size_t i = 1; i < x.size(); ++i) {
          auto next = multiply(prod, x[i]);
          if (!next)
            return S(0);
          prod = std::move(*next);
        }
        return tau(ElementaryTensor<M>{prod});
      },
      Provenance::trace_power);
}

template <Monomial M, typename S>
struct NormalizedCocycle {
  S lambda;
  Cochain<M, S> normalized;
};

/// Splits an even-degree cyclic cochain as lambda tau_1^(2n) + phi_0, where
/// phi_0 vanishes on the all-units tensor.
template <typename S>
NormalizedCocycle<CuntzMonomial, S> one_normalize(const Cochain<CuntzMonomial, S> &phi) {
  const int n = phi.degree();
  if (n % 2 != 0)
    throw std::invalid_argument("one_normalize expects an even degree");
  S lambda = phi(ElementaryTensor<CuntzMonomial>::units(n));
  if (lambda == 0)
    return {lambda, phi};
  return {lambda, combine(S(1), phi, -lambda, trace_power(trace_cuntz(S(1)), n))};
}

/// Cobounds a 1-normalized cyclic cocycle phi of degree n >= 1.
///
/// psi_1 = phi o r pushes phi - delta psi_1 to zero on transition-free
/// tensors; psi_2 = (phi - delta psi_1) o s~ then clears the transitions,
/// so phi = delta(psi_1 + psi_2). The preconditions are checked on
/// `samples` (degree-n tensors): cyclicity, vanishing on the all-units
/// tensor, and vanishing on boundaries of s(samples).
template <typename S>
Cochain<CuntzMonomial, S>
cobound_normalized(const Cochain<CuntzMonomial, S> &phi,
                   std::span<const ElementaryTensor<CuntzMonomial>> samples) {
  using M = CuntzMonomial;
  const int n = phi.degree();
  if (n < 1)
    throw std::invalid_argument("cobound_normalized needs degree >= 1");
  if (phi(ElementaryTensor<M>::units(n)) != 0)
    throw std::invalid_argument("cochain is not 1-normalized");
  const auto simple = simple_cuntz_spec();
  for (const auto &x : samples) {
    if (x.degree() != n)
      throw std::invalid_argument("sample has the wrong degree");
    auto cx = chain_of<M, S>(x);
    if (phi(cyclic_shift(cx)) != phi(cx))
      throw std::invalid_argument("cochain is not cyclic");
    if (phi(boundary(s_apply(simple, cx))) != 0)
      throw std::invalid_argument("cochain is not a cocycle");
  }

  const auto r = long_cuntz_spec(WeightMode::length_weighted);
  const auto psi1 = pullback(phi, n - 1, [r](const ElementaryTensor<M> &x) {
    return s_apply(r, chain_of<M, S>(x));
  });
  const auto phi1 = phi - coboundary(psi1);
  const auto psi2 = pullback(phi1, n - 1, [h = phi_homotopy(n)](const ElementaryTensor<M> &x) {
    return h(chain_of<M, S>(x));
  });
  return psi1 + psi2;
}

/// Traces on p-words and q-words with a shared value on the unit.
template <typename S = Rational>
struct TracePair {
  std::function<S(const Word &)> tau_p;
  std::function<S(const Word &)> tau_q;
  S unit;
};

/// tau(p_a q_b) = tau(q_b p_a), reduced to tau_p, tau_q, the unit value, or 0.
template <typename S>
Cochain<CuntzMonomial, S> trace_from_pair(TracePair<S> pair) {
  if (pair.tau_p(Word{}) != pair.unit || pair.tau_q(Word{}) != pair.unit)
    throw std::invalid_argument("trace pair disagrees on the unit");
  auto data = std::make_shared<const TracePair<S>>(std::move(pair));
  return Cochain<CuntzMonomial, S>(
      0,
      [data](const ElementaryTensor<CuntzMonomial> &x) {
        auto swapped = cuntz_mul(CuntzMonomial::q(x[0].beta), CuntzMonomial::p(x[0].alpha));
        if (!swapped)
          return S(0);
        if (swapped->is_unit())
          return data->unit;
        return swapped->alpha.empty() ? data->tau_q(swapped->beta) : data->tau_p(swapped->alpha);
      },
      Provenance::table);
}

/// 1 on the rotations of w, 0 elsewhere.
template <typename S = Rational>
std::function<S(const Word &)> cyclic_class_indicator(Word w) {
  return [w = std::move(w)](const Word &v) {
    if (v.size() != w.size())
      return S(0);
    for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k)
      if (w.rotated(k) == v)
        return S(1);
    return S(0);
  };
}

/// Average over the k cyclic rotations of each word of length k.
template <typename S>
LinComb<FreeWord, S> invariant_project(const LinComb<FreeWord, S> &x) {
  LinComb<FreeWord, S> out;
  std::optional<std::size_t> k;
  for (const auto &[w, c] : x) {
    const auto len = w.letters.size();
    if (len == 0)
      throw std::invalid_argument("invariant_project needs word length >= 1");
    if (k && *k != len)
      throw std::invalid_argument("invariant_project needs a homogeneous word length");
    k = len;
    const S share = c / S(len);
    for (std::size_t j = 0; j < len; ++j)
      out.add(FreeWord{w.letters.rotated(j)}, share);
  }
  return out;
}

} // namespace hoch
