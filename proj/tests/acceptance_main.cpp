// Acceptance gate: one line of verdict per criterion, exit code = number of
// failures. Each criterion carries its own wall-clock budget, enforced here,
// so regressions in speed fail as loudly as regressions in math.
//
//   acceptance_tests            run everything
//   acceptance_tests --list     print criterion names
//   acceptance_tests --only N   run a single criterion by name

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "apsidon/apsidon.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace {

using apsidon::EPolynomial;
using apsidon::FiniteSet;
using apsidon::Mapping;
using apsidon::Rational;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  std::string name;
  long budget_ms;
  std::function<Outcome()> body;
};

Outcome pass(std::string detail) { return Outcome{true, std::move(detail)}; }
Outcome fail(std::string detail) { return Outcome{false, std::move(detail)}; }

Mapping square_map() {
  return Mapping::polynomial({Rational(0), Rational(0), Rational(1)});
}

// ---- criterion bodies ----

Outcome oracle_equivalence() {
  apsidon::SplitMix64 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    const FiniteSet s = testgen::random_set(rng, 10, 100);
    const long long energy = apsidon::additive_energy(s);
    if (energy != oracle::count_quadruples(s))
      return fail("energy mismatch on trial " + std::to_string(trial));
    const bool tight =
        energy == apsidon::sidon_energy_bound(static_cast<long long>(s.size()));
    if (tight != oracle::is_sidon(s) || apsidon::is_sidon(s) != oracle::is_sidon(s))
      return fail("sidon verdict mismatch on trial " + std::to_string(trial));
    const auto fast = apsidon::sidon_witness(s);
    const auto slow = oracle::first_witness(s);
    if (fast.has_value() != slow.has_value() || (fast && !(*fast == *slow)))
      return fail("witness mismatch on trial " + std::to_string(trial));
  }
  return pass("1000 random sets: energy, verdict and witness agree with brute force");
}

Outcome norm_identity() {
  apsidon::SplitMix64 rng(911);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteSet support = testgen::random_sidon_set(rng, 8, 64);
    const EPolynomial p = testgen::random_epolynomial(rng, support, 8);
    const Rational b2sq = apsidon::b2_norm_squared(p);
    const Rational b4p4 = apsidon::b4_norm_fourth(p);
    Rational quartic(0);
    for (const auto& [freq, c] : p) {
      const Rational n2 = c.norm_sq();
      quartic += n2 * n2;
    }
    if (b4p4 != Rational(2) * b2sq * b2sq - quartic)
      return fail("Sidon-support identity failed on trial " + std::to_string(trial));
    if (b4p4 < b2sq * b2sq)
      return fail("norm monotonicity failed on trial " + std::to_string(trial));
    if (b4p4 != oracle::b4_fourth(p))
      return fail("fourth power disagrees with brute force on trial " + std::to_string(trial));
  }
  return pass("200 Sidon-support polynomials: exact fourth-power identity holds");
}

Outcome dirichlet_growth() {
  for (long n = 1; n <= 12; ++n) {
    std::vector<Rational> freqs;
    for (long k = 1; k <= n; ++k) freqs.emplace_back(k);
    const EPolynomial p = EPolynomial::unit_coefficients(FiniteSet(std::move(freqs)));
    const Rational direct = oracle::b4_fourth(p);
    if (direct != Rational(apsidon::dirichlet_kernel_energy(n)))
      return fail("closed form disagrees with brute force at n=" + std::to_string(n));
  }
  // ratio(100) vs the limit (2/3)^(1/4), compared through 6-digit floors:
  // each floor is within one scaled unit of its target, so a gap of
  // |a - b| + 2 units bounds the true distance.
  const mpz_class e100 = apsidon::dirichlet_kernel_energy(100);
  const mpz_class a =
      apsidon::root_floor_scaled(Rational(e100, mpz_class(1000000)), 4, 6);
  const mpz_class b = apsidon::root_floor_scaled(Rational(2, 3), 4, 6);
  const mpz_class gap = abs(a - b) + 2;
  if (gap * 200 >= mpz_class(1000000))
    return fail("ratio(100) is not within 1/200 of the limit; floors " + a.get_str() + " vs " +
                b.get_str());
  return pass("closed form matches brute force to n=12; ratio(100)=0." + a.get_str() +
              " within 1/200 of limit 0." + b.get_str());
}

Outcome kernel_verification() {
  const auto report = apsidon::verify_kernel(20);
  if (report.tuples_checked != 116280)
    return fail("expected 116280 tuples, saw " + std::to_string(report.tuples_checked));
  if (!report.counterexamples.empty()) {
    const auto& c = report.counterexamples.front();
    std::ostringstream s;
    s << "counterexample at (" << c.k[0] << "," << c.k[1] << "," << c.k[2] << "," << c.k[3]
      << ")";
    return fail(s.str());
  }
  return pass("116280 tuples in [1,20]: all determinants nonzero, no vector in any kernel");
}

Outcome chain_construction() {
  apsidon::SearchConfig cfg;
  cfg.budget = 2000;
  cfg.seed = 7;
  const auto result = apsidon::build_chain(square_map(), 10, cfg);
  if (std::holds_alternative<apsidon::ChainFailure>(result)) {
    const auto& f = std::get<apsidon::ChainFailure>(result);
    return fail("search gave up at stage n=" + std::to_string(f.stage_n));
  }
  const auto& state = std::get<apsidon::ChainState>(result);
  if (state.stages.size() != 7)
    return fail("expected stages 4..10, saw " + std::to_string(state.stages.size()));
  FiniteSet running;
  for (std::size_t i = 0; i < state.stages.size(); ++i) {
    const auto& st = state.stages[i];
    if (st.n != static_cast<int>(i) + 4 || st.b.size() != static_cast<std::size_t>(st.n))
      return fail("stage " + std::to_string(i) + " has wrong length");
    if (!(st.b == apsidon::progression_image(square_map(), st.a)))
      return fail("stage " + std::to_string(i) + " image does not match its progression");
    for (const Rational& t : st.b)
      if (running.contains(t)) return fail("stage images are not disjoint");
    running = set_union(running, st.b);
  }
  if (!(running == state.m) || state.m.size() != 49)
    return fail("union of stage images is inconsistent");
  if (!oracle::is_sidon(state.m))
    return fail("final 49-point union is not Sidon by brute force");
  return pass("chain 4..10 built (49 points), union Sidon by brute force, images disjoint");
}

Outcome affine_obstruction() {
  apsidon::SplitMix64 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    Rational a = apsidon::sample_rational(rng, Rational(-3), Rational(3), 50);
    if (a.is_zero()) a = Rational(1, 7);
    const Rational b = apsidon::sample_rational(rng, Rational(-3), Rational(3), 50);
    const Mapping f = Mapping::affine(a, b);
    const int n = 4 + static_cast<int>(rng.next_below(7));
    const apsidon::Progression p(Rational(0), Rational(1), n);
    if (oracle::is_sidon(apsidon::progression_image(f, p)))
      return fail("affine image claimed Sidon on trial " + std::to_string(trial));
    const auto v =
        apsidon::check_progression(f, p, apsidon::ConstraintSpec{n, FiniteSet({Rational(0)})});
    if (!v || v->vector_index != 0)
      return fail("affine image not caught by the first vector on trial " +
                  std::to_string(trial));
  }
  return pass("50 random affine maps: no window image is Sidon, all caught by the first vector");
}

Outcome cantor_identities() {
  if (apsidon::cantor_value(Rational(1, 4)) != Rational(1, 3))
    return fail("c(1/4) != 1/3");
  apsidon::SplitMix64 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational t = apsidon::sample_rational(rng, Rational(0), Rational(1), 1000000);
    const Rational c = apsidon::cantor_value(t);
    if (apsidon::cantor_value(t / Rational(3)) != c / Rational(2))
      return fail("self-similarity failed at t=" + t.to_string());
    if (apsidon::cantor_value(Rational(1) - t) != Rational(1) - c)
      return fail("symmetry failed at t=" + t.to_string());
  }
  return pass("c(1/4)=1/3 and 2000 identity checks over denominators up to 10^6");
}

Outcome patterned_ap_instance() {
  const apsidon::IntervalUnion e1 = apsidon::fat_cantor(4);
  const apsidon::IntervalUnion e2 = apsidon::fat_cantor_gap_probes(4);
  const apsidon::Pattern pattern = apsidon::Pattern::alternating(8);
  apsidon::PatternedApConfig cfg;
  cfg.budget = 20000;
  cfg.seed = 0;
  const auto result = apsidon::find_patterned_ap(e1, e2, pattern, cfg);
  if (const auto* ap = std::get_if<apsidon::PatternedAp>(&result)) {
    for (int k = 1; k <= pattern.n(); ++k) {
      const Rational t = ap->x + Rational(k) * ap->y;
      const auto& target = pattern.target(k) == 1 ? e1 : e2;
      if (!target.interior_contains(t))
        return fail("claimed progression leaves its target at k=" + std::to_string(k));
    }
    return pass("x=" + ap->x.to_string() + " y=" + ap->y.to_string());
  }
  const auto& f = std::get<apsidon::SearchFailure>(result);
  return fail("no alternating 8-term progression found after " +
              std::to_string(f.candidates_tried) +
              " candidates (the even-index probes admit no 4-term progression)");
}

Outcome cli_determinism() {
#ifndef APSIDON_CLI_PATH
  return fail("CLI path not configured at build time");
#else
  auto run = [](const std::string& args) -> std::pair<int, std::string> {
    const std::string cmd = std::string("\"") + APSIDON_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
  };
  const std::string args = "build-chain --phi poly:0,0,1 --n-max 6 --seed 7";
  const auto [code1, out1] = run(args);
  const auto [code2, out2] = run(args);
  if (code1 != 0 || code2 != 0)
    return fail("exit codes " + std::to_string(code1) + " and " + std::to_string(code2));
  if (out1.empty() || out1 != out2) return fail("two identical invocations produced different bytes");
  return pass("two runs of the seeded chain build are byte-identical (" +
              std::to_string(out1.size()) + " bytes)");
#endif
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"oracle-equivalence", 10000, oracle_equivalence},
      {"norm-identity", 10000, norm_identity},
      {"dirichlet-growth", 1000, dirichlet_growth},
      {"kernel-verification", 5000, kernel_verification},
      {"chain-construction", 60000, chain_construction},
      {"affine-obstruction", 1000, affine_obstruction},
      {"cantor-identities", 5000, cantor_identities},
      {"patterned-ap-instance", 30000, patterned_ap_instance},
      {"cli-determinism", 10000, cli_determinism},
  };

  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--list") {
      for (const auto& c : criteria) std::cout << c.name << "\n";
      return 0;
    }
    if (arg == "--only" && i + 1 < argc) {
      only = argv[++i];
      continue;
    }
    std::cerr << "usage: acceptance_tests [--list | --only NAME]\n";
    return 2;
  }
  if (!only.empty()) {
    bool known = false;
    for (const auto& c : criteria) known = known || c.name == only;
    if (!known) {
      std::cerr << "unknown criterion \"" << only << "\"\n";
      return 2;
    }
  }

  int failures = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && c.name != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = Outcome{false, std::string("exception: ") + e.what()};
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (outcome.pass && elapsed > c.budget_ms)
      outcome = Outcome{false, "exceeded " + std::to_string(c.budget_ms) + " ms budget; " +
                                   outcome.detail};
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << elapsed << " ms) "
              << outcome.detail << std::endl;
  }
  std::cout << (ran - failures) << "/" << ran << " criteria passed" << std::endl;
  return failures;
}
