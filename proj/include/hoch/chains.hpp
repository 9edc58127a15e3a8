#pragma once

// Face maps, Hochschild boundary, signed cyclic shift and cyclic
// equivalence on the chain spaces C_n = A^{(x)(n+1)}.

#include "hoch/algebra.hpp"

#include <atomic>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hoch {

namespace fault {

/// Mutation switch for the verification harness: when set, face map d_1
/// carries the wrong sign. Never enabled outside fault-injection runs.
inline std::atomic<bool> &face_sign_flip_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

class ScopedFaceSignFlip {
public:
  explicit ScopedFaceSignFlip(bool enable = true)
      : previous_(face_sign_flip_flag().exchange(enable)) {}
  ~ScopedFaceSignFlip() { face_sign_flip_flag().store(previous_); }
  ScopedFaceSignFlip(const ScopedFaceSignFlip &) = delete;
  ScopedFaceSignFlip &operator=(const ScopedFaceSignFlip &) = delete;

private:
  bool previous_;
};

} // namespace fault

inline int sign_of_power(std::size_t k) noexcept { return k % 2 == 0 ? 1 : -1; }

/// d_i on one tensor with n+2 factors, 0 <= i <= n+1. Returns the signed
/// image, or nullopt when the merged product vanishes.
template <Monomial M>
std::optional<std::pair<int, ElementaryTensor<M>>> face_map(std::size_t i,
                                                            const ElementaryTensor<M> &x) {
  const std::size_t k = x.size();
  if (k < 2)
    throw std::invalid_argument("face maps need a chain of degree >= 1");
  if (i >= k)
    throw std::out_of_range("face index out of range");
  std::vector<M> f;
  f.reserve(k - 1);
  int sign = 1;
  if (i == 0) {
    auto prod = multiply(x[k - 1], x[0]);
    if (!prod)
      return std::nullopt;
    for (std::size_t j = 1; j + 1 < k; ++j)
      f.push_back(x[j]);
    f.push_back(std::move(*prod));
  } else {
    auto prod = multiply(x[i - 1], x[i]);
    if (!prod)
      return std::nullopt;
    for (std::size_t j = 0; j + 1 < i; ++j)
      f.push_back(x[j]);
    f.push_back(std::move(*prod));
    for (std::size_t j = i + 1; j < k; ++j)
      f.push_back(x[j]);
    sign = sign_of_power(i);
    if (i == 1 && fault::face_sign_flip_flag().load(std::memory_order_relaxed))
      sign = -sign;
  }
  return std::pair{sign, ElementaryTensor<M>(std::move(f))};
}

template <Monomial M, typename S>
Chain<M, S> face_map(std::size_t i, const Chain<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[t, c] : x)
    if (auto img = face_map(i, t))
      out.add(img->second, img->first == 1 ? c : -c);
  return out;
}

/// Hochschild boundary d = sum of all face maps.
template <Monomial M, typename S>
Chain<M, S> boundary(const Chain<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[t, c] : x) {
    if (t.degree() < 1)
      throw std::invalid_argument("boundary of a degree-0 chain");
    for (std::size_t i = 0; i < t.size(); ++i)
      if (auto img = face_map(i, t))
        out.add(img->second, img->first == 1 ? c : -c);
  }
  return out;
}

/// Unsigned rotation a_1..a_{n+1} -> a_{n+1} a_1 .. a_n.
template <Monomial M>
ElementaryTensor<M> rotate_right(const ElementaryTensor<M> &x) {
  std::vector<M> f;
  f.reserve(x.size());
  f.push_back(x[x.size() - 1]);
  for (std::size_t j = 0; j + 1 < x.size(); ++j)
    f.push_back(x[j]);
  return ElementaryTensor<M>(std::move(f));
}

/// Signed cyclic shift t(a_1..a_{n+1}) = (-1)^n a_{n+1} a_1 .. a_n.
template <Monomial M, typename S>
Chain<M, S> cyclic_shift(const Chain<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[t, c] : x)
    out.add(rotate_right(t), t.degree() % 2 == 0 ? c : -c);
  return out;
}

/// t applied k times.
template <Monomial M, typename S>
Chain<M, S> cyclic_shift_pow(Chain<M, S> x, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j)
    x = cyclic_shift(x);
  return x;
}

/// N = sum_{j=0}^{n} t^j.
template <Monomial M, typename S>
Chain<M, S> cyclic_norm(const Chain<M, S> &x) {
  Chain<M, S> out;
  for (const auto &[t, c] : x) {
    const int sign_step = t.degree() % 2 == 0 ? 1 : -1;
    ElementaryTensor<M> cur = t;
    S coef = c;
    for (std::size_t j = 0; j < t.size(); ++j) {
      out.add(cur, coef);
      cur = rotate_right(cur);
      if (sign_step < 0)
        coef = -coef;
    }
  }
  return out;
}

/// x - y in (I - t)C_n. Since t has finite order n+1 and the scalars have
/// characteristic zero, image(I - t) = kernel(N).
template <Monomial M, typename S>
bool cyclic_equiv(const Chain<M, S> &x, const Chain<M, S> &y) {
  const auto dx = chain_degree(x);
  const auto dy = chain_degree(y);
  if (dx && dy && *dx != *dy)
    throw std::invalid_argument("cyclic_equiv: degree mismatch");
  return cyclic_norm(x - y).is_zero();
}

/// Transition statistics of an elementary tensor: k positions (cyclically)
/// where beta_i and alpha_{i+1} are both nonempty, l of them orthogonal.
struct TransitionProfile {
  std::size_t k = 0;
  std::size_t l = 0;
  friend bool operator==(const TransitionProfile &, const TransitionProfile &) = default;
};

inline bool has_transition(const CuntzMonomial &a, const CuntzMonomial &next) {
  return !a.beta.empty() && !next.alpha.empty();
}

inline TransitionProfile transition_profile(const ElementaryTensor<CuntzMonomial> &x) {
  TransitionProfile p;
  const std::size_t k = x.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto &a = x[i];
    const auto &b = x[(i + 1) % k];
    if (!has_transition(a, b))
      continue;
    ++p.k;
    if (!cuntz_mul(a, b))
      ++p.l;
  }
  return p;
}

template <Monomial M>
std::size_t chain_length(const ElementaryTensor<M> &x) {
  return x.total_length();
}

} // namespace hoch
