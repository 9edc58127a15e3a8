#pragma once

// Splitting maps rho : A -> A (x) A and the homotopy operators built from
// them: s = sum_k s_k, the weighted second reduction r, P = sd + ds with its
// term ledger, the transition-clearing operator Phi and its homotopy.

#include "hoch/chains.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace hoch {

enum class SplitKind { simple_cuntz, long_cuntz, long_free };

/// `none` uses s built directly from rho. `length_weighted` is the second
/// reduction r(x) = (1/l(x)) sum_k s_k(x) with the unnormalized long rho,
/// and r(x) = 0 when l(x) = 0.
enum class WeightMode { none, length_weighted };

template <Monomial M>
struct SplitSpec {
  SplitKind kind;
  WeightMode weight = WeightMode::none;

  std::string_view name() const noexcept {
    switch (kind) {
    case SplitKind::simple_cuntz:
      return "simple-cuntz";
    case SplitKind::long_cuntz:
      return "long-cuntz";
    case SplitKind::long_free:
      return "long-free";
    }
    return "?";
  }
};

inline SplitSpec<CuntzMonomial> simple_cuntz_spec() { return {SplitKind::simple_cuntz}; }
inline SplitSpec<CuntzMonomial> long_cuntz_spec(WeightMode w = WeightMode::none) {
  return {SplitKind::long_cuntz, w};
}
inline SplitSpec<FreeWord> long_free_spec(WeightMode w = WeightMode::none) {
  return {SplitKind::long_free, w};
}

/// p_a q_b -> p_a (x) q_b. Left inverse of the multiplication map.
template <typename S = Rational>
Chain<CuntzMonomial, S> rho_simple(const CuntzMonomial &a) {
  return chain_of<CuntzMonomial, S>({CuntzMonomial::p(a.alpha), CuntzMonomial::q(a.beta)});
}

/// Unnormalized long split: every cut of the p-string, then every cut of
/// the q-string. pi of the result is l(a) * a, and rho(1) = 0.
template <typename S = Rational>
Chain<CuntzMonomial, S> rho_long_cuntz(const CuntzMonomial &a) {
  Chain<CuntzMonomial, S> out;
  const std::size_t n = a.alpha.size();
  const std::size_t m = a.beta.size();
  for (std::size_t k = 0; k < n; ++k)
    out.add(ElementaryTensor<CuntzMonomial>{CuntzMonomial::p(a.alpha.slice(0, k)),
                                            CuntzMonomial{a.alpha.slice(k, n), a.beta}},
            S(1));
  for (std::size_t l = 1; l <= m; ++l)
    out.add(ElementaryTensor<CuntzMonomial>{CuntzMonomial{a.alpha, a.beta.slice(l, m)},
                                            CuntzMonomial::q(a.beta.slice(0, l))},
            S(1));
  return out;
}

/// Unnormalized split of a free word at every proper prefix.
template <typename S = Rational>
Chain<FreeWord, S> rho_long_free(const FreeWord &w) {
  Chain<FreeWord, S> out;
  const std::size_t n = w.letters.size();
  for (std::size_t k = 0; k < n; ++k)
    out.add(ElementaryTensor<FreeWord>{FreeWord{w.letters.slice(0, k)},
                                       FreeWord{w.letters.slice(k, n)}},
            S(1));
  return out;
}

/// The degree-1 chain rho(a) selected by spec (never weighted).
template <typename S = Rational, Monomial M>
Chain<M, S> split(const SplitSpec<M> &spec, const M &a) {
  if constexpr (std::is_same_v<M, CuntzMonomial>) {
    switch (spec.kind) {
    case SplitKind::simple_cuntz:
      return rho_simple<S>(a);
    case SplitKind::long_cuntz:
      return rho_long_cuntz<S>(a);
    default:
      break;
    }
  } else if constexpr (std::is_same_v<M, FreeWord>) {
    if (spec.kind == SplitKind::long_free)
      return rho_long_free<S>(a);
  }
  throw std::invalid_argument("split kind does not match the monomial basis");
}

/// Linear extension of split over an algebra element.
template <Monomial M, typename S>
Chain<M, S> split_element(const SplitSpec<M> &spec, const Element<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[a, c] : x)
    out.add_scaled(split<S>(spec, a), c);
  return out;
}

namespace detail {

/// a_1..a_{k-1} (x) rho(a_k) (x) a_{k+1}..a_{n+1}, k one-based, no sign.
template <Monomial M, typename S>
Chain<M, S> insert_split(const ElementaryTensor<M> &x, std::size_t k, const Chain<M, S> &rho) {
  Chain<M, S> out;
  for (const auto &[uv, c] : rho) {
    std::vector<M> f;
    f.reserve(x.size() + 1);
    for (std::size_t j = 0; j + 1 < k; ++j)
      f.push_back(x[j]);
    f.push_back(uv[0]);
    f.push_back(uv[1]);
    for (std::size_t j = k; j < x.size(); ++j)
      f.push_back(x[j]);
    out.add(ElementaryTensor<M>(std::move(f)), c);
  }
  return out;
}

} // namespace detail

/// s_k(x) = (-1)^k a_1..a_{k-1} (x) rho(a_k) (x) a_{k+1}..a_{n+1}, one-based
/// slot k in 1..n+1. Uses the unnormalized rho regardless of weight mode.
template <typename S = Rational, Monomial M>
Chain<M, S> s_slot(const SplitSpec<M> &spec, std::size_t k, const ElementaryTensor<M> &x) {
  if (k < 1 || k > x.size())
    throw std::out_of_range("split slot out of range");
  auto out = detail::insert_split(x, k, split<S>(spec, x[k - 1]));
  if (k % 2 == 1)
    out *= S(-1);
  return out;
}

template <Monomial M, typename S>
Chain<M, S> s_slot(const SplitSpec<M> &spec, std::size_t k, const Chain<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[t, c] : x)
    out.add_scaled(s_slot<S>(spec, k, t), c);
  return out;
}

/// s(x) = sum_k s_k(x); in weighted mode r(x) = s(x) / l(x), 0 if l(x) = 0.
template <Monomial M, typename S>
Chain<M, S> s_apply(const SplitSpec<M> &spec, const Chain<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[t, c] : x) {
    S coef = c;
    if (spec.weight == WeightMode::length_weighted) {
      const auto l = t.total_length();
      if (l == 0)
        continue;
      coef /= S(l);
    }
    for (std::size_t k = 1; k <= t.size(); ++k)
      out.add_scaled(s_slot<S>(spec, k, t), coef);
  }
  return out;
}

/// P = s d + d s on degree n >= 1 and P = d s on degree 0, where nothing
/// lives below degree 0.
template <Monomial M, typename S>
Chain<M, S> P_apply(const SplitSpec<M> &spec, const Chain<M, S> &x) {
  const auto deg = chain_degree(x);
  if (!deg)
    return {};
  auto out = boundary(s_apply(spec, x));
  if (*deg >= 1)
    out += s_apply(spec, boundary(x));
  return out;
}

/// s_k d_j on one tensor of degree n >= 1 (k in 1..n, j in 0..n).
template <typename S = Rational, Monomial M>
Chain<M, S> sd_term(const SplitSpec<M> &spec, std::size_t k, std::size_t j,
                    const ElementaryTensor<M> &x) {
  auto face = face_map(j, x);
  if (!face)
    return {};
  auto out = s_slot<S>(spec, k, face->second);
  if (face->first < 0)
    out *= S(-1);
  return out;
}

/// d_j s_k on one tensor of degree n (j in 0..n+1, k in 1..n+1).
template <typename S = Rational, Monomial M>
Chain<M, S> ds_term(const SplitSpec<M> &spec, std::size_t j, std::size_t k,
                    const ElementaryTensor<M> &x) {
  return face_map(j, s_slot<S>(spec, k, x));
}

/// One named summand of P after the pairwise cancellations. `slot` is the
/// position i in 1..n of a per-slot quadruple, or 0 for the four
/// wraparound terms.
template <Monomial M, typename S = Rational>
struct PTerm {
  std::string label;
  std::size_t slot;
  Chain<M, S> value;
};

/// The 4n+4 surviving summands of s d + d s on a degree-n chain:
///   sd[n,0], ds[n+1,n+1], ds[0,1], ds[0,n+1], and for each i in 1..n
///   sd[i,i], ds[i,i], ds[i,i+1], ds[i+1,i].
/// Labels read sd[k,j] = s_k d_j and ds[j,k] = d_j s_k. Built from the
/// unweighted s; the remaining 2(n+1)^2 - (4n+4) summands cancel in pairs.
template <Monomial M, typename S>
std::vector<PTerm<M, S>> P_terms(const SplitSpec<M> &spec, int n, const Chain<M, S> &x) {
  if (n < 1)
    throw std::invalid_argument("P_terms needs degree >= 1");
  if (spec.weight != WeightMode::none)
    throw std::invalid_argument("P_terms is defined for the unweighted s");
  if (auto d = chain_degree(x); d && *d != n)
    throw std::invalid_argument("P_terms: degree mismatch");
  const auto un = static_cast<std::size_t>(n);

  auto sd = [&](std::size_t k, std::size_t j) {
    Chain<M, S> out;
    for (const auto &[t, c] : x)
      out.add_scaled(sd_term<S>(spec, k, j, t), c);
    return out;
  };
  auto ds = [&](std::size_t j, std::size_t k) {
    Chain<M, S> out;
    for (const auto &[t, c] : x)
      out.add_scaled(ds_term<S>(spec, j, k, t), c);
    return out;
  };
  auto label = [](const char *kind, std::size_t a, std::size_t b) {
    return std::string(kind) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  };

  std::vector<PTerm<M, S>> terms;
  terms.reserve(4 * un + 4);
  terms.push_back({label("sd", un, 0), 0, sd(un, 0)});
  terms.push_back({label("ds", un + 1, un + 1), 0, ds(un + 1, un + 1)});
  terms.push_back({label("ds", 0, 1), 0, ds(0, 1)});
  terms.push_back({label("ds", 0, un + 1), 0, ds(0, un + 1)});
  for (std::size_t i = 1; i <= un; ++i) {
    terms.push_back({label("sd", i, i), i, sd(i, i)});
    terms.push_back({label("ds", i, i), i, ds(i, i)});
    terms.push_back({label("ds", i, i + 1), i, ds(i, i + 1)});
    terms.push_back({label("ds", i + 1, i), i, ds(i + 1, i)});
  }
  return terms;
}

/// prod_{j=1}^{factors} (I - P/j) with the simple Cuntz split, evaluated
/// right to left. The factors commute.
template <typename S>
Chain<CuntzMonomial, S> apply_phi_factors(int factors, Chain<CuntzMonomial, S> x) {
  const auto spec = simple_cuntz_spec();
  for (int j = factors; j >= 1; --j)
    x.add_scaled(P_apply(spec, x), S(-1) / S(j));
  return x;
}

/// Phi = prod_{j=1}^{n+1} (I - P/j) on a degree-n chain, n >= 1.
template <typename S>
Chain<CuntzMonomial, S> phi_apply(const Chain<CuntzMonomial, S> &x) {
  const auto deg = chain_degree(x);
  if (!deg)
    return {};
  if (*deg < 1)
    throw std::invalid_argument("phi_apply needs degree >= 1");
  return apply_phi_factors(*deg + 1, x);
}

/// Homotopy s~ with Phi = I - (s~ d + d s~) for Phi at degree n.
///
/// For commuting F = I - (hd + dh) and chain map G = I - (kd + dk),
/// FG = I - ((k + hG)d + d(k + hG)). Applied to the factors I - P/j, whose
/// homotopies are s/j, this gives s~ = sum_j (s/j) prod_{i>j} (I - P/i).
/// The operator acts on chains of any degree, always with n+1 factors.
class PhiHomotopy {
public:
  explicit PhiHomotopy(int n) : factors_(n + 1) {
    if (n < 1)
      throw std::invalid_argument("phi_homotopy needs n >= 1");
  }

  int factors() const noexcept { return factors_; }

  template <typename S>
  Chain<CuntzMonomial, S> operator()(const Chain<CuntzMonomial, S> &x) const {
    const auto spec = simple_cuntz_spec();
    Chain<CuntzMonomial, S> acc;
    Chain<CuntzMonomial, S> y = x;
    for (int j = factors_; j >= 1; --j) {
      acc.add_scaled(s_apply(spec, y), S(1) / S(j));
      if (j > 1)
        y.add_scaled(P_apply(spec, y), S(-1) / S(j));
    }
    return acc;
  }

private:
  int factors_;
};

inline PhiHomotopy phi_homotopy(int n) { return PhiHomotopy(n); }

} // namespace hoch
