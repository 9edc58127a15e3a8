// Acceptance gate: one line per criterion, exact equality throughout.
// Exit status is nonzero if any criterion fails.

#include "hoch/testkit.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef HOCHKIT_BINARY
#error "HOCHKIT_BINARY must name the CLI executable"
#endif

namespace {

using namespace hoch;

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Run {
  std::string check;
  std::vector<int> degrees;
  int trials = 100;
};

/// Runs every (check, degree) pair and collects failing labels.
Outcome run_all(const std::vector<Run> &runs, bool expect_pass = true) {
  Outcome out;
  std::size_t reports = 0;
  for (const auto &r : runs)
    for (int n : r.degrees) {
      GenParams p;
      p.degree = n;
      p.trials = r.trials;
      const auto report = run_check(r.check, p);
      ++reports;
      if (report.passed() != expect_pass) {
        out.ok = false;
        out.note += " " + r.check + "@n=" + std::to_string(n);
        if (!report.failures.empty())
          out.note += " [" + report.failures.front().what + " on " + report.failures.front().input + "]";
      }
    }
  if (out.ok)
    out.note = std::to_string(reports) + " reports";
  return out;
}

struct Shell {
  int status;
  std::string output;
};

Shell shell(const std::string &args) {
  const std::string cmd = std::string(HOCHKIT_BINARY) + " " + args + " 2>&1";
  Shell s{-1, {}};
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return s;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    s.output.append(buf.data(), got);
  const int raw = pclose(pipe);
  s.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return s;
}

Outcome cli_contract() {
  Outcome out;
  const std::pair<const char *, const char *> cases[] = {
      {"apply d --n 1 \"p[1] (x) q[1]\"", "1 - p[1]q[1]\n"},
      {"apply t --n 1 \"p[1] (x) q[1]\"", "-1 * (q[1] (x) p[1])\n"},
      {"apply phi --n 1 \"p[1] (x) q[1]\"", "1 (x) 1\n"},
  };
  for (const auto &[args, expected] : cases) {
    const auto s = shell(args);
    if (s.status != 0 || s.output != expected) {
      out.ok = false;
      out.note += " `" + std::string(args) + "` gave '" + s.output + "'";
    }
  }
  const auto all = shell("verify all --seed 1");
  if (all.status != 0) {
    out.ok = false;
    out.note += " verify all exited " + std::to_string(all.status);
  }
  if (out.ok)
    out.note = "3 apply outputs bit-exact, verify all exit 0";
  return out;
}

} // namespace

int main() {
  const std::vector<int> n123{1, 2, 3};
  const std::vector<int> n12{1, 2};

  struct Criterion {
    int id;
    const char *title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "chain-complex sanity: d o d = 0, t^(n+1) = I, N(I - t) = 0",
       [&] {
         return run_all({{"d-squared-zero", n123}, {"shift-order", n123}, {"norm-kills-image", n123}});
       }},
      {2, "kernel-of-N test agrees with linear-solve membership",
       [&] { return run_all({{"cyclic-equiv-oracle", n123}}); }},
      {3, "split operators commute with the cyclic shift (three specs)",
       [&] { return run_all({{"split-shift-compat", n123}}); }},
      {4, "pairwise cancellations, labelled sum and 4n+4 terms",
       [&] { return run_all({{"split-boundary-cancellation", n123}}); }},
      {5, "four wraparound identities",
       [&] { return run_all({{"wraparound-terms", n123}}); }},
      {6, "derivation rule of the long split (exhaustive l <= 4 plus random)",
       [&] { return run_all({{"split-derivation", {1}}}); }},
      {7, "N(P x - k x) has at most k-1 transitions",
       [&] { return run_all({{"transition-reduction", n123}}); }},
      {8, "N(Phi x) is transition-free",
       [&] { return run_all({{"phi-clears-transitions", n12, 50}}); }},
      {9, "N((rd + dr)x - x) = 0 on transition-free and free-word tensors",
       [&] { return run_all({{"second-reduction", n123}}); }},
      {10, "trace suite", [&] { return run_all({{"trace-identities", n12}}); }},
      {11, "constructive cobounding pipeline",
       [&] { return run_all({{"cobound-pipeline", {1, 2, 3, 4}}}); }},
      {12, "Phi = I - (s~ d + d s~)", [&] { return run_all({{"phi-homotopy", n12}}); }},
      {13, "invariant projector on word layers k <= 4",
       [&] { return run_all({{"invariant-projector", {1}}}); }},
      {14, "flipped face sign is detected by checks 1, 4, 9 within 25 trials",
       [&] {
         fault::ScopedFaceSignFlip flip;
         return run_all({{"d-squared-zero", n123, 25},
                         {"split-boundary-cancellation", n123, 25},
                         {"second-reduction", n123, 25}},
                        false);
       }},
      {15, "CLI contract", cli_contract},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.ok ? 0 : 1;
    std::cout << "criterion " << (c.id < 10 ? " " : "") << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  "
              << c.title << " (" << o.note << ")\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
