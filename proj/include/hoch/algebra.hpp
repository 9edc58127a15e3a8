#pragma once

#include "hoch/tensor.hpp"

#include <stdexcept>
#include <vector>

namespace hoch {

/// Bilinear extension of the monomial product; zero products are dropped.
template <Monomial M, typename S>
Element<M, S> lin_mul(const Element<M, S> &x, const Element<M, S> &y) {
  Element<M, S> out;
  for (const auto &[a, ca] : x)
    for (const auto &[b, cb] : y)
      if (auto ab = multiply(a, b))
        out.add(*ab, ca * cb);
  return out;
}

template <Monomial M, typename S>
Element<M, S> operator*(const Element<M, S> &x, const Element<M, S> &y) {
  return lin_mul(x, y);
}

/// Multiplication map on degree-1 chains: a (x) b -> ab.
template <Monomial M, typename S>
Element<M, S> pi_multiply(const Chain<M, S> &x) {
  Element<M, S> out;
  for (const auto &[t, c] : x) {
    if (t.degree() != 1)
      throw std::invalid_argument("pi_multiply expects a degree-1 chain");
    if (auto ab = multiply(t[0], t[1]))
      out.add(*ab, c);
  }
  return out;
}

/// a * x, acting on the first tensor factor.
template <Monomial M, typename S>
Chain<M, S> left_multiply(const M &a, const Chain<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[t, c] : x) {
    auto prod = multiply(a, t[0]);
    if (!prod)
      continue;
    std::vector<M> f = t.factors();
    f[0] = std::move(*prod);
    out.add(ElementaryTensor<M>(std::move(f)), c);
  }
  return out;
}

/// x * b, acting on the last tensor factor.
template <Monomial M, typename S>
Chain<M, S> right_multiply(const Chain<M, S> &x, const M &b) {
  Chain<M, S> out;
  for (const auto &[t, c] : x) {
    auto prod = multiply(t[t.size() - 1], b);
    if (!prod)
      continue;
    std::vector<M> f = t.factors();
    f.back() = std::move(*prod);
    out.add(ElementaryTensor<M>(std::move(f)), c);
  }
  return out;
}

} // namespace hoch
