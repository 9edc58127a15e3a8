#pragma once

// Seeded generators and the registry of executable identity checks.

#include "hoch/cochains.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hoch {

struct GenParams {
  std::uint64_t seed = 1;
  int degree = 1;
  int max_len = 3;     // bound on l(a) for every generated factor
  int index_bound = 3; // generators 1..index_bound
  int trials = 100;
  bool no_transition = false;
  bool unit_free = false;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of trial `trial` under master seed `seed`; independent of the
/// order in which trials are evaluated.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return mix64(mix64(seed) ^ mix64(trial + 0x632be59bd9b4e019ULL));
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t trial) : engine_(trial_seed(seed, trial)) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

Word rand_word(Rng &rng, int length, int index_bound);
CuntzMonomial rand_monomial(Rng &rng, const GenParams &p);
FreeWord rand_free_word(Rng &rng, const GenParams &p);
Rational rand_scalar(Rng &rng);

/// Degree p.degree tensor, every factor with l <= p.max_len. Honors the
/// no_transition and unit_free flags.
ElementaryTensor<CuntzMonomial> rand_tensor(Rng &rng, const GenParams &p);
ElementaryTensor<CuntzMonomial> rand_tensor(const GenParams &p, std::uint64_t trial = 0);

/// Tensor with exactly k transitions (0 <= k <= degree + 1). Requires
/// max_len >= 2 when k > 0.
ElementaryTensor<CuntzMonomial> rand_tensor_with_transitions(Rng &rng, const GenParams &p, int k);

ElementaryTensor<FreeWord> rand_free_tensor(Rng &rng, const GenParams &p);

/// Combination of `terms` random tensors with random coefficients.
Chain<CuntzMonomial> rand_chain(Rng &rng, const GenParams &p, int terms);
Chain<FreeWord> rand_free_chain(Rng &rng, const GenParams &p, int terms);

/// Finite table with pseudo-random values in {-2..2} on tensors whose
/// factors all have l <= max_factor_len, zero elsewhere.
Cochain<CuntzMonomial> rand_table_cochain(std::uint64_t seed, int degree, int max_factor_len = 2,
                                          int index_bound = 3);

/// delta(chi) + c tau_1^(n) with chi the cyclic symmetrization of a random
/// table; n = p.degree >= 1 and c = 0 when n is odd.
Cochain<CuntzMonomial> rand_cocycle(const GenParams &p, const Rational &c);

/// Independent route for cyclic equivalence: solves (I - t)u = x on the
/// span of the rotation orbits of supp(x) by exact elimination.
bool in_shift_image_by_solve(const Chain<CuntzMonomial> &x);
bool in_shift_image_by_solve(const Chain<FreeWord> &x);

struct Failure {
  std::size_t trial;
  std::string what;
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check;
  GenParams params;
  std::size_t trials = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures; // first few counterexamples

  bool passed() const noexcept { return failure_count == 0; }
  std::string_view status() const noexcept { return passed() ? "pass" : "fail"; }
};

struct CheckInfo {
  std::string name;
  std::string summary;
  std::vector<int> default_degrees;
  std::function<CheckReport(const GenParams &)> run;
};

const std::vector<CheckInfo> &check_registry();
const CheckInfo &find_check(std::string_view name); // throws std::out_of_range
CheckReport run_check(std::string_view name, const GenParams &p);

} // namespace hoch
