#pragma once

#include "hoch/lincomb.hpp"
#include "hoch/word.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hoch {

/// a_1 (x) ... (x) a_{n+1}, a basis element of the degree-n chain space.
template <Monomial M>
class ElementaryTensor {
public:
  ElementaryTensor() = default;
  ElementaryTensor(std::initializer_list<M> factors) : factors_(factors) {}
  explicit ElementaryTensor(std::vector<M> factors) : factors_(std::move(factors)) {}

  /// All-units tensor of the given degree.
  static ElementaryTensor units(int degree) {
    return ElementaryTensor(std::vector<M>(static_cast<std::size_t>(degree + 1), M::unit()));
  }

  int degree() const noexcept { return static_cast<int>(factors_.size()) - 1; }
  std::size_t size() const noexcept { return factors_.size(); }
  const M &operator[](std::size_t i) const { return factors_[i]; }
  const std::vector<M> &factors() const noexcept { return factors_; }
  auto begin() const noexcept { return factors_.begin(); }
  auto end() const noexcept { return factors_.end(); }

  /// Sum of factor lengths.
  std::size_t total_length() const noexcept {
    std::size_t l = 0;
    for (const auto &a : factors_)
      l += length(a);
    return l;
  }

  friend bool operator==(const ElementaryTensor &, const ElementaryTensor &) = default;

  /// Canonical order: total length, then factorwise.
  friend std::strong_ordering operator<=>(const ElementaryTensor &x, const ElementaryTensor &y) {
    if (auto c = x.total_length() <=> y.total_length(); c != 0)
      return c;
    return std::lexicographical_compare_three_way(x.factors_.begin(), x.factors_.end(),
                                                  y.factors_.begin(), y.factors_.end());
  }

private:
  std::vector<M> factors_;
};

/// Element of the algebra: a finite combination of monomials.
template <Monomial M, typename S = Rational>
using Element = LinComb<M, S>;

/// Degree-n chain: combination of elementary tensors with n+1 factors.
template <Monomial M, typename S = Rational>
using Chain = LinComb<ElementaryTensor<M>, S>;

/// Degree shared by every tensor of x, or nullopt for the zero chain.
/// Throws if x mixes degrees.
template <Monomial M, typename S>
std::optional<int> chain_degree(const Chain<M, S> &x) {
  std::optional<int> deg;
  for (const auto &[t, c] : x) {
    if (deg && *deg != t.degree())
      throw std::invalid_argument("chain mixes tensor degrees");
    deg = t.degree();
  }
  return deg;
}

template <Monomial M, typename S = Rational>
Chain<M, S> chain_of(ElementaryTensor<M> t, S c = S(1)) {
  return Chain<M, S>(std::move(t), c);
}

/// Embeds an algebra element as a degree-0 chain.
template <Monomial M, typename S>
Chain<M, S> as_chain(const Element<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[m, c] : x)
    out.add(ElementaryTensor<M>{m}, c);
  return out;
}

/// Inverse of as_chain; throws unless x has degree 0.
template <Monomial M, typename S>
Element<M, S> as_element(const Chain<M, S> &x) {
  Element<M, S> out;
  for (const auto &[t, c] : x) {
    if (t.degree() != 0)
      throw std::invalid_argument("expected a degree-0 chain");
    out.add(t[0], c);
  }
  return out;
}

} // namespace hoch
