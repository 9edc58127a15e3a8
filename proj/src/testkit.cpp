#include "hoch/testkit.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hoch {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Word rand_word(Rng &rng, int length, int index_bound) {
  std::vector<Index> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    letters.push_back(static_cast<Index>(rng.uniform(1, index_bound)));
  return Word(std::move(letters));
}

namespace {

CuntzMonomial monomial_with_lengths(Rng &rng, int alpha_len, int beta_len, int index_bound) {
  return {rand_word(rng, alpha_len, index_bound), rand_word(rng, beta_len, index_bound)};
}

} // namespace

CuntzMonomial rand_monomial(Rng &rng, const GenParams &p) {
  const int total = rng.uniform(p.unit_free ? 1 : 0, p.max_len);
  const int alpha_len = rng.uniform(0, total);
  return monomial_with_lengths(rng, alpha_len, total - alpha_len, p.index_bound);
}

FreeWord rand_free_word(Rng &rng, const GenParams &p) {
  return {rand_word(rng, rng.uniform(p.unit_free ? 1 : 0, p.max_len), p.index_bound)};
}

Rational rand_scalar(Rng &rng) {
  int num = rng.uniform(-3, 3);
  if (num == 0)
    num = 1;
  return Rational(num) / Rational(rng.uniform(1, 3));
}

ElementaryTensor<CuntzMonomial> rand_tensor_with_transitions(Rng &rng, const GenParams &p, int k) {
  const int n = p.degree;
  const int slots = n + 1;
  if (k < 0 || k > slots)
    throw std::invalid_argument("transition count out of range");
  if (k > 0 && p.max_len < 2)
    throw std::invalid_argument("transitions need max_len >= 2");

  for (int attempt = 0;; ++attempt) {
    if (attempt > 1000)
      throw std::runtime_error("could not generate a tensor with the requested profile");
    // Position i pairs beta_i with alpha_{i+1}, cyclically.
    std::vector<int> order(static_cast<std::size_t>(slots));
    for (int i = 0; i < slots; ++i)
      order[static_cast<std::size_t>(i)] = i;
    for (int i = slots - 1; i > 0; --i)
      std::swap(order[static_cast<std::size_t>(i)],
                order[static_cast<std::size_t>(rng.uniform(0, i))]);
    std::vector<bool> chosen(static_cast<std::size_t>(slots), false);
    for (int i = 0; i < k; ++i)
      chosen[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = true;
    // For positions without a transition, which side is forced empty.
    std::vector<bool> clear_beta(static_cast<std::size_t>(slots));
    for (int i = 0; i < slots; ++i)
      clear_beta[static_cast<std::size_t>(i)] = rng.coin();

    std::vector<CuntzMonomial> factors;
    factors.reserve(static_cast<std::size_t>(slots));
    bool ok = true;
    for (int j = 0; j < slots; ++j) {
      const auto prev = static_cast<std::size_t>((j + slots - 1) % slots);
      const auto cur = static_cast<std::size_t>(j);
      const bool alpha_needed = chosen[prev];
      const bool alpha_empty = !chosen[prev] && !clear_beta[prev];
      const bool beta_needed = chosen[cur];
      const bool beta_empty = !chosen[cur] && clear_beta[cur];
      const int lo = std::max((alpha_needed ? 1 : 0) + (beta_needed ? 1 : 0), p.unit_free ? 1 : 0);
      const int hi = alpha_empty && beta_empty ? 0 : p.max_len;
      if (lo > hi) {
        ok = false;
        break;
      }
      const int total = rng.uniform(lo, hi);
      int a_lo = alpha_needed ? 1 : 0;
      int a_hi = alpha_empty ? 0 : total - (beta_needed ? 1 : 0);
      if (beta_empty)
        a_lo = std::max(a_lo, total);
      if (a_lo > a_hi) {
        ok = false;
        break;
      }
      const int alpha_len = rng.uniform(a_lo, a_hi);
      factors.push_back(monomial_with_lengths(rng, alpha_len, total - alpha_len, p.index_bound));
    }
    if (!ok)
      continue;
    ElementaryTensor<CuntzMonomial> x(std::move(factors));
    if (p.unit_free && std::any_of(x.begin(), x.end(), [](const auto &a) { return a.is_unit(); }))
      continue;
    return x;
  }
}

ElementaryTensor<CuntzMonomial> rand_tensor(Rng &rng, const GenParams &p) {
  if (p.no_transition)
    return rand_tensor_with_transitions(rng, p, 0);
  std::vector<CuntzMonomial> factors;
  for (int i = 0; i <= p.degree; ++i)
    factors.push_back(rand_monomial(rng, p));
  return ElementaryTensor<CuntzMonomial>(std::move(factors));
}

ElementaryTensor<CuntzMonomial> rand_tensor(const GenParams &p, std::uint64_t trial) {
  Rng rng(p.seed, trial);
  return rand_tensor(rng, p);
}

ElementaryTensor<FreeWord> rand_free_tensor(Rng &rng, const GenParams &p) {
  std::vector<FreeWord> factors;
  for (int i = 0; i <= p.degree; ++i)
    factors.push_back(rand_free_word(rng, p));
  return ElementaryTensor<FreeWord>(std::move(factors));
}

Chain<CuntzMonomial> rand_chain(Rng &rng, const GenParams &p, int terms) {
  Chain<CuntzMonomial> out;
  for (int i = 0; i < terms; ++i)
    out.add(rand_tensor(rng, p), rand_scalar(rng));
  return out;
}

Chain<FreeWord> rand_free_chain(Rng &rng, const GenParams &p, int terms) {
  Chain<FreeWord> out;
  for (int i = 0; i < terms; ++i)
    out.add(rand_free_tensor(rng, p), rand_scalar(rng));
  return out;
}

Cochain<CuntzMonomial> rand_table_cochain(std::uint64_t seed, int degree, int max_factor_len,
                                          int index_bound) {
  const auto base = mix64(seed ^ (0x51ed27a3ULL + static_cast<std::uint64_t>(degree)));
  return Cochain<CuntzMonomial>(
      degree,
      [base, max_factor_len, index_bound](const ElementaryTensor<CuntzMonomial> &x) {
        std::uint64_t h = base;
        for (const auto &a : x) {
          if (length(a) > static_cast<std::size_t>(max_factor_len))
            return Rational(0);
          for (auto i : a.alpha) {
            if (i > static_cast<Index>(index_bound))
              return Rational(0);
            h = mix64(h ^ i);
          }
          h = mix64(h ^ 0xa1ULL);
          for (auto i : a.beta) {
            if (i > static_cast<Index>(index_bound))
              return Rational(0);
            h = mix64(h ^ i);
          }
          h = mix64(h ^ 0xb2ULL);
        }
        return Rational(static_cast<int>(h % 5) - 2);
      },
      Provenance::table);
}

Cochain<CuntzMonomial> rand_cocycle(const GenParams &p, const Rational &c) {
  const int n = p.degree;
  if (n < 1)
    throw std::invalid_argument("rand_cocycle needs degree >= 1");
  if (n % 2 != 0 && c != 0)
    throw std::invalid_argument("odd-degree cocycles carry no trace part");
  const auto chi = symmetrize_cochain(rand_table_cochain(p.seed, n - 1, 2, p.index_bound));
  auto phi = coboundary(chi);
  if (c == 0)
    return phi;
  return phi + c * trace_power(trace_cuntz(Rational(1)), n);
}

namespace {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank by exact Gauss-Jordan elimination.
Eigen::Index exact_rank(RationalMatrix a) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0)
      ++pivot;
    if (pivot == a.rows())
      continue;
    a.row(pivot).swap(a.row(rank));
    const Rational inv = Rational(1) / a(rank, col);
    a.row(rank) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (r != rank && a(r, col) != 0) {
        const Rational f = a(r, col);
        a.row(r) -= f * a.row(rank);
      }
    ++rank;
  }
  return rank;
}

template <typename M>
bool solve_shift_image(const Chain<M> &x) {
  if (x.is_zero())
    return true;
  std::map<ElementaryTensor<M>, Eigen::Index> index;
  std::vector<ElementaryTensor<M>> basis;
  for (const auto &[t, c] : x) {
    auto cur = t;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (index.try_emplace(cur, static_cast<Eigen::Index>(basis.size())).second)
        basis.push_back(cur);
      cur = rotate_right(cur);
    }
  }
  const auto dim = static_cast<Eigen::Index>(basis.size());
  // Column b holds (I - t) e_b; last column holds x.
  RationalMatrix a = RationalMatrix::Zero(dim, dim + 1);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto &t = basis[static_cast<std::size_t>(b)];
    a(b, b) += Rational(1);
    const Rational sign = t.degree() % 2 == 0 ? Rational(1) : Rational(-1);
    a(index.at(rotate_right(t)), b) -= sign;
  }
  for (const auto &[t, c] : x)
    a(index.at(t), dim) = c;
  return exact_rank(a.leftCols(dim)) == exact_rank(a);
}

} // namespace

bool in_shift_image_by_solve(const Chain<CuntzMonomial> &x) { return solve_shift_image(x); }
bool in_shift_image_by_solve(const Chain<FreeWord> &x) { return solve_shift_image(x); }

const CheckInfo &find_check(std::string_view name) {
  for (const auto &c : check_registry())
    if (c.name == name)
      return c;
  throw std::out_of_range("unknown check: " + std::string(name));
}

CheckReport run_check(std::string_view name, const GenParams &p) { return find_check(name).run(p); }

} // namespace hoch
