#pragma once

// Words over positive generator indices, the Cuntz semigroup (minus its
// zero) and the free semigroup.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hoch {

/// Generator index, always >= 1. There is no upper bound, so every O_m
/// (including m = infinity) is covered without configuration.
using Index = std::uint32_t;

/// Finite ordered string of generator indices.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Index> letters) : letters_(letters) { validate(); }
  explicit Word(std::vector<Index> letters) : letters_(std::move(letters)) { validate(); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Index operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Index> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Letters [first, last) as a new word.
  Word slice(std::size_t first, std::size_t last) const {
    return Word(Raw{}, std::vector<Index>(letters_.begin() + first, letters_.begin() + last));
  }

  bool starts_with(const Word &prefix) const {
    return prefix.size() <= size() &&
           std::equal(prefix.letters_.begin(), prefix.letters_.end(), letters_.begin());
  }

  /// Word rotated left by k: w[k..] followed by w[..k].
  Word rotated(std::size_t k) const {
    std::vector<Index> out(letters_);
    if (!out.empty())
      std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
    return Word(Raw{}, std::move(out));
  }

  friend Word operator+(const Word &a, const Word &b) {
    std::vector<Index> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(Raw{}, std::move(out));
  }

  friend bool operator==(const Word &, const Word &) = default;
  friend std::strong_ordering operator<=>(const Word &a, const Word &b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

private:
  struct Raw {};
  Word(Raw, std::vector<Index> letters) : letters_(std::move(letters)) {}

  void validate() const {
    if (std::find(letters_.begin(), letters_.end(), Index{0}) != letters_.end())
      throw std::invalid_argument("generator indices must be >= 1");
  }

  std::vector<Index> letters_;
};

/// Basis element p_alpha q_beta of the reduced Cuntz algebra. The unit is
/// (empty, empty); the semigroup zero is never stored.
struct CuntzMonomial {
  Word alpha;
  Word beta;

  static CuntzMonomial unit() { return {}; }
  static CuntzMonomial p(Word w) { return {std::move(w), {}}; }
  static CuntzMonomial q(Word w) { return {{}, std::move(w)}; }

  bool is_unit() const noexcept { return alpha.empty() && beta.empty(); }

  friend bool operator==(const CuntzMonomial &, const CuntzMonomial &) = default;
};

/// Canonical order: total length, then alpha, then beta.
inline std::strong_ordering operator<=>(const CuntzMonomial &a, const CuntzMonomial &b) {
  const auto la = a.alpha.size() + a.beta.size();
  const auto lb = b.alpha.size() + b.beta.size();
  if (auto c = la <=> lb; c != 0)
    return c;
  if (auto c = a.alpha <=> b.alpha; c != 0)
    return c;
  return a.beta <=> b.beta;
}

/// Basis word of the free semigroup algebra (tensor algebra on l1_m).
struct FreeWord {
  Word letters;

  static FreeWord unit() { return {}; }
  bool is_unit() const noexcept { return letters.empty(); }

  friend bool operator==(const FreeWord &, const FreeWord &) = default;
};

inline std::strong_ordering operator<=>(const FreeWord &a, const FreeWord &b) {
  if (auto c = a.letters.size() <=> b.letters.size(); c != 0)
    return c;
  return a.letters <=> b.letters;
}

/// Product in the Cuntz semigroup; nullopt is the zero z0.
///
/// (p_a q_b)(p_c q_d): if c = b.tau the result is p_{a.tau} q_d; if
/// b = c.tau it is p_a q_{d.tau}; otherwise the generators are orthogonal.
inline std::optional<CuntzMonomial> cuntz_mul(const CuntzMonomial &a, const CuntzMonomial &b) {
  if (b.alpha.starts_with(a.beta))
    return CuntzMonomial{a.alpha + b.alpha.slice(a.beta.size(), b.alpha.size()), b.beta};
  if (a.beta.starts_with(b.alpha))
    return CuntzMonomial{a.alpha, b.beta + a.beta.slice(b.alpha.size(), a.beta.size())};
  return std::nullopt;
}

inline FreeWord free_mul(const FreeWord &u, const FreeWord &v) { return {u.letters + v.letters}; }

/// l(p_a q_b) = l(a) + l(b).
inline std::size_t length_monomial(const CuntzMonomial &a) noexcept {
  return a.alpha.size() + a.beta.size();
}

// Uniform interface used by the generic chain machinery.

inline std::optional<CuntzMonomial> multiply(const CuntzMonomial &a, const CuntzMonomial &b) {
  return cuntz_mul(a, b);
}
inline std::optional<FreeWord> multiply(const FreeWord &a, const FreeWord &b) {
  return free_mul(a, b);
}
inline std::size_t length(const CuntzMonomial &a) noexcept { return length_monomial(a); }
inline std::size_t length(const FreeWord &w) noexcept { return w.letters.size(); }

template <typename M>
concept Monomial = std::totally_ordered<M> && requires(const M &a) {
  { M::unit() } -> std::same_as<M>;
  { a.is_unit() } -> std::convertible_to<bool>;
  { multiply(a, a) } -> std::same_as<std::optional<M>>;
  { length(a) } -> std::convertible_to<std::size_t>;
};

static_assert(Monomial<CuntzMonomial>);
static_assert(Monomial<FreeWord>);

} // namespace hoch
