#pragma once

#include "hoch/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

namespace hoch {

/// Finitely supported linear combination of basis objects.
///
/// Zero coefficients are never stored, so two combinations are equal iff
/// their term maps are equal. Iteration follows the canonical order of Key.
template <typename Key, typename Scalar = Rational>
class LinComb {
public:
  using key_type = Key;
  using scalar_type = Scalar;
  using container = std::map<Key, Scalar>;

  LinComb() = default;
  explicit LinComb(Key k, Scalar c = Scalar(1)) { add(std::move(k), c); }
  LinComb(std::initializer_list<std::pair<Key, Scalar>> terms) {
    for (const auto &[k, c] : terms)
      add(k, c);
  }

  /// Adds c * k, dropping the entry if it cancels.
  void add(const Key &k, const Scalar &c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Scalar coeff(const Key &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }
  const container &terms() const noexcept { return terms_; }

  LinComb &operator+=(const LinComb &o) {
    for (const auto &[k, c] : o.terms_)
      add(k, c);
    return *this;
  }
  LinComb &operator-=(const LinComb &o) {
    for (const auto &[k, c] : o.terms_)
      add(k, -c);
    return *this;
  }
  LinComb &operator*=(const Scalar &s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto &[k, c] : terms_)
      c *= s;
    return *this;
  }
  LinComb &operator/=(const Scalar &s) {
    for (auto &[k, c] : terms_)
      c /= s;
    return *this;
  }

  /// Adds s * o.
  LinComb &add_scaled(const LinComb &o, const Scalar &s) {
    if (s == 0)
      return *this;
    for (const auto &[k, c] : o.terms_)
      add(k, c * s);
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
  friend LinComb operator*(const Scalar &s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Scalar &s) { return a *= s; }
  friend LinComb operator/(LinComb a, const Scalar &s) { return a /= s; }
  friend bool operator==(const LinComb &, const LinComb &) = default;

private:
  container terms_;
};

/// Applies a linear map given on basis elements: sum of c * f(k).
template <typename Out, typename Key, typename Scalar, typename F>
Out linear_extend(const LinComb<Key, Scalar> &x, F &&f) {
  Out out;
  for (const auto &[k, c] : x)
    out.add_scaled(f(k), c);
  return out;
}

} // namespace hoch
