// hochkit: apply operators to chain expressions, run the identity checks,
// and demonstrate the cobounding pipeline.
//
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.

#include "hoch/io.hpp"
#include "hoch/testkit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace hoch;
using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApplyOptions {
  std::string op;
  std::string expr;
  std::optional<int> n;
  std::optional<int> i;
  std::optional<std::string> spec;
  bool weighted = false;
};

SplitSpec<CuntzMonomial> cuntz_spec(const ApplyOptions &o, bool weighted) {
  const std::string name = o.spec.value_or(weighted ? "long" : "simple");
  const auto w = weighted ? WeightMode::length_weighted : WeightMode::none;
  if (name == "simple") {
    if (weighted)
      throw UsageError("the weighted operator needs --spec long");
    return simple_cuntz_spec();
  }
  if (name == "long")
    return long_cuntz_spec(w);
  throw UsageError("spec '" + name + "' does not act on Cuntz chains");
}

SplitSpec<FreeWord> free_spec(const ApplyOptions &o, bool weighted) {
  const std::string name = o.spec.value_or("free");
  if (name != "free")
    throw UsageError("spec '" + name + "' does not act on free words");
  return long_free_spec(weighted ? WeightMode::length_weighted : WeightMode::none);
}

template <typename M>
SplitSpec<M> spec_for(const ApplyOptions &o, bool weighted) {
  if constexpr (std::is_same_v<M, CuntzMonomial>)
    return cuntz_spec(o, weighted);
  else
    return free_spec(o, weighted);
}

template <typename M>
std::string apply_op(const ApplyOptions &o, const Chain<M> &x, int degree) {
  const auto &op = o.op;
  if (op == "d") {
    if (degree < 1)
      throw UsageError("d needs a chain of degree >= 1");
    return format_chain(boundary(x));
  }
  if (op == "d_i") {
    if (!o.i)
      throw UsageError("d_i needs --i");
    if (degree < 1 || *o.i < 0 || *o.i > degree)
      throw UsageError("face index must lie in 0.." + std::to_string(degree));
    return format_chain(face_map(static_cast<std::size_t>(*o.i), x));
  }
  if (op == "t")
    return format_chain(cyclic_shift(x));
  if (op == "N")
    return format_chain(cyclic_norm(x));
  if (op == "s")
    return format_chain(s_apply(spec_for<M>(o, o.weighted), x));
  if (op == "r")
    return format_chain(s_apply(spec_for<M>(o, true), x));
  if (op == "P")
    return format_chain(P_apply(spec_for<M>(o, o.weighted), x));
  if (op == "phi") {
    if constexpr (std::is_same_v<M, CuntzMonomial>) {
      if (degree < 1)
        throw UsageError("phi needs a chain of degree >= 1");
      return format_chain(phi_apply(x));
    } else {
      throw UsageError("phi acts on Cuntz chains only");
    }
  }
  if (op == "pi") {
    if (degree != 1)
      throw UsageError("pi needs a chain of degree 1");
    return format_chain(as_chain(pi_multiply(x)));
  }
  if (op == "rho-simple" || op == "rho-long" || op == "rho-free") {
    if (degree != 0)
      throw UsageError(op + " needs a chain of degree 0");
    const bool free = std::is_same_v<M, FreeWord>;
    if (free != (op == "rho-free"))
      throw UsageError(op + " does not act on this basis");
    if constexpr (std::is_same_v<M, CuntzMonomial>) {
      const auto spec = op == "rho-simple" ? simple_cuntz_spec() : long_cuntz_spec();
      return format_chain(split_element(spec, as_element(x)));
    } else {
      return format_chain(split_element(long_free_spec(), as_element(x)));
    }
  }
  throw UsageError("unknown operator '" + op + "'");
}

int cmd_apply(const ApplyOptions &o) {
  const auto parsed = parse_chain(o.expr);
  if (o.n && *o.n != parsed.degree)
    throw UsageError("expression has degree " + std::to_string(parsed.degree) + ", --n is " +
                     std::to_string(*o.n));
  std::string out;
  if (parsed.basis() == Basis::cuntz) {
    // Unit-only input is shared by both bases; rho-free reads it as words.
    if (o.op == "rho-free" || (o.spec && *o.spec == "free"))
      out = apply_op(o, parse_free_chain(o.expr), parsed.degree);
    else
      out = apply_op(o, std::get<0>(parsed.chain), parsed.degree);
  } else {
    out = apply_op(o, std::get<1>(parsed.chain), parsed.degree);
  }
  std::cout << out << '\n';
  return 0;
}

struct VerifyOptions {
  std::string check;
  std::optional<int> n;
  std::uint64_t seed = 1;
  int trials = 100;
  int max_len = 3;
  int index_bound = 3;
  std::string format = "text";
  std::string mutate;
};

json report_json(const CheckReport &r, const VerifyOptions &o) {
  json failures = json::array();
  for (const auto &f : r.failures)
    failures.push_back({{"trial", f.trial},
                        {"what", f.what},
                        {"input", f.input},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  json params = {{"n", r.params.degree},         {"seed", r.params.seed},
                 {"trials", r.params.trials},    {"max_len", r.params.max_len},
                 {"index_bound", r.params.index_bound}};
  if (!o.mutate.empty())
    params["mutate"] = o.mutate;
  return {{"check", r.check},
          {"params", params},
          {"trials", r.trials},
          {"failure_count", r.failure_count},
          {"failures", failures},
          {"status", std::string(r.status())}};
}

void print_text(const CheckReport &r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.check << " n=" << r.params.degree << " ("
            << r.trials << " trials";
  if (!r.passed())
    std::cout << ", " << r.failure_count << " failures";
  std::cout << ")\n";
  for (const auto &f : r.failures) {
    std::cout << "  trial " << f.trial << ": " << f.what << "\n"
              << "    input:    " << f.input << "\n"
              << "    expected: " << f.expected << "\n"
              << "    actual:   " << f.actual << "\n";
  }
}

int cmd_verify(const VerifyOptions &o) {
  if (o.format != "text" && o.format != "json")
    throw UsageError("--format must be text or json");
  if (!o.mutate.empty() && o.mutate != "flip-face-sign")
    throw UsageError("unknown mutation '" + o.mutate + "'");
  if (o.trials < 1 || o.max_len < 1 || o.index_bound < 1)
    throw UsageError("--trials, --max-len and --index-bound must be positive");

  std::vector<const CheckInfo *> checks;
  if (o.check == "all") {
    for (const auto &c : check_registry())
      checks.push_back(&c);
  } else {
    try {
      checks.push_back(&find_check(o.check));
    } catch (const std::out_of_range &) {
      throw UsageError("unknown check '" + o.check + "'");
    }
  }

  fault::ScopedFaceSignFlip flip(o.mutate == "flip-face-sign");
  bool all_passed = true;
  std::size_t reports = 0;
  std::size_t passed = 0;
  for (const auto *info : checks) {
    const std::vector<int> degrees = o.n ? std::vector<int>{*o.n} : info->default_degrees;
    for (int n : degrees) {
      GenParams p;
      p.seed = o.seed;
      p.degree = n;
      p.trials = o.trials;
      p.max_len = o.max_len;
      p.index_bound = o.index_bound;
      CheckReport r;
      try {
        r = info->run(p);
      } catch (const std::invalid_argument &e) {
        throw UsageError(info->name + " at n=" + std::to_string(n) + ": " + e.what());
      }
      ++reports;
      passed += r.passed() ? 1 : 0;
      all_passed = all_passed && r.passed();
      if (o.format == "json")
        std::cout << report_json(r, o).dump() << '\n';
      else
        print_text(r);
    }
  }
  if (o.format == "text")
    std::cout << passed << "/" << reports << " reports passed\n";
  return all_passed ? 0 : kExitFail;
}

struct DemoOptions {
  std::string name;
  int n = 2;
  std::string c = "0";
  std::uint64_t seed = 1;
  int trials = 100;
};

int cmd_demo(const DemoOptions &o) {
  if (o.name != "cobound")
    throw UsageError("unknown demo '" + o.name + "'");
  if (o.n < 1)
    throw UsageError("--n must be >= 1");
  Rational c;
  try {
    c = Rational(o.c);
  } catch (const std::exception &) {
    throw UsageError("--c must be a rational number such as 3 or -2/5");
  }
  if (o.n % 2 != 0 && c != 0)
    throw UsageError("odd degree carries no trace part; use --c 0");

  GenParams p;
  p.seed = o.seed;
  p.degree = o.n;
  const auto phi = rand_cocycle(p, c);
  std::cout << "phi = delta(chi) + c * tau^(" << o.n << "), c = " << to_string(c) << "\n";

  Cochain<CuntzMonomial> phi0 = phi;
  Rational lambda(0);
  if (o.n % 2 == 0) {
    auto normalized = one_normalize(phi);
    lambda = normalized.lambda;
    phi0 = normalized.normalized;
    std::cout << "recovered lambda = " << to_string(lambda) << "\n";
  } else {
    lambda = phi(ElementaryTensor<CuntzMonomial>::units(o.n));
    std::cout << "odd degree: phi(1 (x) ... (x) 1) = " << to_string(lambda)
              << ", no trace removal\n";
  }

  Rng rng(o.seed, 0xdeadULL);
  std::vector<ElementaryTensor<CuntzMonomial>> construction;
  for (int i = 0; i < 4; ++i)
    construction.push_back(rand_tensor(rng, p));
  const auto psi = cobound_normalized<Rational>(phi0, construction);

  Rational worst(0);
  for (int t = 0; t < o.trials; ++t) {
    Rng sample(o.seed, static_cast<std::uint64_t>(t) + 1);
    const auto x = rand_chain(sample, p, 2);
    const Rational residual = abs(phi0(x) - psi(boundary(x)));
    worst = std::max(worst, residual);
  }
  std::cout << "max residual of phi_0 - delta(psi) on " << o.trials
            << " fresh samples = " << to_string(worst) << "\n";
  return lambda == c && worst == 0 ? 0 : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact cyclic and Hochschild computations on Cuntz and free algebras", "hochkit"};
  app.require_subcommand(1);

  ApplyOptions ao;
  auto *apply = app.add_subcommand("apply", "apply an operator to a chain expression");
  apply->add_option("op", ao.op, "d d_i t N s r P phi pi rho-simple rho-long rho-free")->required();
  apply->add_option("expr", ao.expr, "chain expression, e.g. \"p[1] (x) q[1]\"")->required();
  apply->add_option("--n", ao.n, "degree of the input chain");
  apply->add_option("--i", ao.i, "face index for d_i");
  apply->add_option("--spec", ao.spec, "split: simple, long or free")
      ->check(CLI::IsMember({"simple", "long", "free"}));
  apply->add_flag("--weighted", ao.weighted, "use the length-weighted split");

  VerifyOptions vo;
  auto *verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("check", vo.check, "check name or 'all'")->required();
  verify->add_option("--n", vo.n, "degree (default: the check's own degrees)");
  verify->add_option("--seed", vo.seed);
  verify->add_option("--trials", vo.trials);
  verify->add_option("--max-len", vo.max_len);
  verify->add_option("--index-bound", vo.index_bound);
  verify->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--mutate", vo.mutate, "fault injection: flip-face-sign");

  DemoOptions dm;
  auto *demo = app.add_subcommand("demo", "constructive demonstrations");
  demo->add_option("name", dm.name, "cobound")->required();
  demo->add_option("--n", dm.n);
  demo->add_option("--c", dm.c, "trace coefficient, integer or fraction");
  demo->add_option("--seed", dm.seed);
  demo->add_option("--trials", dm.trials, "number of fresh sample chains");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*apply)
      return cmd_apply(ao);
    if (*verify)
      return cmd_verify(vo);
    return cmd_demo(dm);
  } catch (const ParseError &e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
