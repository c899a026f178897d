// Copyright 2026 The cmld Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cmld/assignment.h"
#include "cmld/circuit.h"
#include "cmld/cli.h"
#include "cmld/engine.h"
#include "cmld/group_algebra.h"
#include "cmld/motif.h"
#include "cmld/oracle.h"
#include "cmld/random_instances.h"

namespace cmld {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <typename... Args>
std::string Fmt(const char* format, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// 1. (v0+v)^2 = 0 and prod (v0+v_i) != 0 iff the v_i are independent.
Outcome AlgebraIdentities() {
  const auto start = std::chrono::steady_clock::now();
  const FieldRing ring{FieldContext(8)};
  long cases = 0, bad = 0;
  auto check_product = [&](int k, const std::vector<std::uint32_t>& rows) {
    auto prod = Identity(ring, k);
    for (std::uint32_t r : rows) prod = Mul(ring, prod, FromPair(ring, GroupVector{k, r}));
    ++cases;
    bad += IsZero(ring, prod) == (RankGf2(rows) == static_cast<int>(rows.size()));
  };
  for (int k = 1; k <= 4; ++k) {
    const std::uint32_t size = 1u << k;
    for (std::uint32_t v = 1; v < size; ++v) {
      const auto e = FromPair(ring, GroupVector{k, v});
      ++cases;
      bad += !IsZero(ring, Mul(ring, e, e));
    }
    // Every sequence of up to k + 1 vectors (k = 4 stops at 4).
    const int max_len = k < 4 ? k + 1 : 4;
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::uint32_t> rows(len, 0);
      for (;;) {
        check_product(k, rows);
        int i = 0;
        while (i < len && ++rows[i] == size) rows[i++] = 0;
        if (i == len) break;
      }
    }
  }
  Rng rng(101);
  for (int i = 0; i < 10000; ++i) {
    const int k = 5 + static_cast<int>(UniformBelow(rng, 6));
    const std::uint32_t v = 1 + static_cast<std::uint32_t>(UniformBelow(rng, (1u << k) - 1));
    const auto e = FromPair(ring, GroupVector{k, v});
    bad += !IsZero(ring, MulByPair(ring, e, GroupVector{k, v}));
    std::vector<std::uint32_t> rows(1 + UniformBelow(rng, k + 1));
    for (auto& r : rows) r = static_cast<std::uint32_t>(RandomBits(rng, k));
    check_product(k, rows);
    ++cases;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {bad == 0 && seconds < 60,
          Fmt("%ld cases, %ld disagreements with GF(2) rank", cases, bad)};
}

// 2. Monte-Carlo survival and the inequality chain on p_t.
Outcome SurvivalFormula() {
  Rng rng(102);
  bool pass = true;
  std::string detail;
  for (int t : {2, 3, 4}) {
    constexpr int kTrials = 100000;
    int survived = 0;
    for (int i = 0; i < kTrials; ++i) {
      const SubspaceFamily f = SampleSubspaces(std::vector<int>{t}, 10, rng);
      std::vector<std::uint32_t> rows;
      for (int j = 0; j < t; ++j) rows.push_back(SampleVector(f, 0, rng).bits);
      survived += RankGf2(rows) == t;
    }
    const double rate = static_cast<double>(survived) / kTrials;
    const double exact = SurvivalProbabilityDouble(t);
    pass = pass && std::abs(rate - exact) <= 0.02;
    detail += Fmt("p%d %.4f vs %.4f; ", t, rate, exact);
  }
  auto p = [](int t) { return SurvivalProbability(t); };
  bool chain = true;
  for (int t = 1; t <= 32; ++t) {
    chain = chain && p(t) > Rational(1, 4);
    if (t > 1) chain = chain && p(t) < p(t - 1);
  }
  chain = chain && p(7) > p(5) * p(2) && p(6) > p(3) * p(3) && p(5) > p(3) * p(2) &&
          p(4) * p(4) * p(4) > p(3) * p(3) * p(3) * p(3) &&
          p(3) * p(3) < p(2) * p(2) * p(2);
  detail += chain ? "inequality chain holds" : "inequality chain FAILS";
  return {pass && chain, detail};
}

// 3. k = 10 random 0-1 vectors are independent with probability in
// [0.25, 0.33].
Outcome IndependenceBound() {
  Rng rng(103);
  constexpr int kTrials = 100000;
  int independent = 0;
  for (int i = 0; i < kTrials; ++i) {
    std::vector<std::uint32_t> rows(10);
    for (auto& r : rows) r = static_cast<std::uint32_t>(RandomBits(rng, 10));
    independent += RankGf2(rows) == 10;
  }
  const double rate = static_cast<double>(independent) / kTrials;
  return {rate >= 0.25 && rate <= 0.33, Fmt("rate %.4f (theory 0.2888)", rate)};
}

// 4. Growth of the repetition count. Each trial costs 2^k coefficients, so
// the per-step running-time ratio is 8 R(k+3) / R(k); the bare R ratio is
// held to the same band divided by 8.
Outcome RepetitionBase() {
  bool pass = true;
  std::string detail;
  for (int k : {6, 9, 12}) {
    const auto r0 = PlanRepetitions(std::vector<int>(k / 3, 3), k, 0.01).trials;
    const auto r1 = PlanRepetitions(std::vector<int>(k / 3 + 1, 3), k + 3, 0.01).trials;
    const double ratio = static_cast<double>(r1) / static_cast<double>(r0);
    const double cost = 8 * ratio;
    pass = pass && cost >= 15.5 && cost <= 17.5 && ratio >= 15.5 / 8 && ratio <= 17.5 / 8;
    detail += Fmt("k=%d R %lld->%lld R-ratio %.3f cost-ratio %.2f; ", k,
                  static_cast<long long>(r0), static_cast<long long>(r1), ratio, cost);
  }
  bool singles = true;
  for (double delta : {0.5, 0.1, 0.01, 1e-3, 1e-9}) {
    for (int k : {1, 4, 9, 16}) {
      singles = singles && PlanRepetitions(std::vector<int>(k, 1), k, delta).trials ==
                               static_cast<std::int64_t>(std::ceil(4 * std::log(1 / delta)));
    }
  }
  detail += singles ? "all-1 R = ceil(4 ln 1/delta)" : "all-1 R MISMATCH";
  return {pass && singles, detail};
}

// 5. Constructed no-instances never answer yes.
Outcome OneSidedSoundness() {
  Rng rng(105);
  std::vector<CmldInstance> circuits;
  std::vector<MotifInstance> graphs;
  // Over-multiplicity: every product uses two variables of color 0 while
  // mu(0) = 1; an unused color keeps the bounds coverable.
  while (circuits.size() < 34) {
    CmldInstance inst;
    inst.k = 3;
    std::vector<GateId> terms;
    for (int t = 0; t < 3; ++t) {
      const VarId a = static_cast<VarId>(UniformBelow(rng, 3));
      const VarId b = (a + 1 + static_cast<VarId>(UniformBelow(rng, 2))) % 3;
      const VarId c = 3 + static_cast<VarId>(UniformBelow(rng, 3));
      terms.push_back(inst.circuit.NewMul(
          inst.circuit.NewMul(inst.circuit.NewInput(a), inst.circuit.NewInput(b)),
          inst.circuit.NewInput(c)));
    }
    inst.circuit.NewAdd(terms);
    inst.var_color = {0, 0, 0, 1, 1, 1};
    inst.multiplicity = {1, 3};
    if (!BruteMultilinear(inst.circuit, inst.var_color, inst.multiplicity, 3)) {
      circuits.push_back(std::move(inst));
    }
  }
  // Squared variable in every product.
  while (circuits.size() < 67) {
    CmldInstance inst;
    inst.k = 4;
    std::vector<GateId> terms;
    for (int t = 0; t < 2; ++t) {
      const GateId sq = inst.circuit.NewInput(static_cast<VarId>(UniformBelow(rng, 6)));
      GateId g = inst.circuit.NewMul(sq, sq);
      for (int j = 0; j < 2; ++j) {
        g = inst.circuit.NewMul(g, inst.circuit.NewInput(static_cast<VarId>(UniformBelow(rng, 6))));
      }
      terms.push_back(g);
    }
    inst.circuit.NewAdd(terms);
    inst.var_color = {0, 1, 2, 0, 1, 2};
    inst.multiplicity = {4, 4, 4};
    if (!BruteMultilinear(inst.circuit, inst.var_color, inst.multiplicity, 4)) {
      circuits.push_back(std::move(inst));
    }
  }
  // Disconnected: every motif color is present but no connected occurrence.
  RandomInstanceParams params;
  params.planted_prob = 0;
  params.max_vertices = 9;
  params.max_edge_prob = 0.25;
  while (graphs.size() < 33) {
    MotifInstance inst = RandomMotifInstance(rng, params);
    int missing = 0;
    ResolveMotif(inst.graph, inst.motif, &missing);
    if (missing == 0 && !BruteGraphMotif(inst.graph, inst.motif)) {
      graphs.push_back(std::move(inst));
    }
  }
  long runs = 0, yes = 0, trials = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    SolveOptions opts;
    opts.seed = seed;
    for (const auto& inst : circuits) {
      const Verdict v = SolveCmld(inst, opts);
      ++runs;
      yes += v.yes;
      trials += v.trials_run;
    }
    for (const auto& inst : graphs) {
      const Verdict v = DecideGraphMotif(inst.graph, inst.motif, opts);
      ++runs;
      yes += v.yes;
      trials += v.trials_run;
    }
  }
  return {yes == 0, Fmt("%zu instances x 100 seeds = %ld runs, %ld trials, %ld yes",
                        circuits.size() + graphs.size(), runs, trials, yes)};
}

// 6. Every variant against the brute-force oracles.
Outcome OracleEquivalence() {
  constexpr int kInstances = 200;
  RandomInstanceParams params;  // n 4..12, k 2..6
  struct Tally {
    const char* name;
    int yes_truth = 0;
    int missed = 0;
    int unsound = 0;
  };
  Tally tallies[5] = {{"motif"}, {"multiset"}, {"min-add"}, {"min-cc"}, {"min-sub"}};
  auto record = [](Tally& t, std::optional<int> truth, std::optional<int> got) {
    if (got && (!truth || *got < *truth)) {
      ++t.unsound;
      return;
    }
    t.yes_truth += truth.has_value();
    t.missed += truth != got;
  };
  auto as_opt = [](bool b) { return b ? std::optional<int>(0) : std::nullopt; };
  const auto start = std::chrono::steady_clock::now();
  for (int variant = 0; variant < 5; ++variant) {
    Rng rng(DeriveSeed(106, static_cast<std::uint64_t>(variant)));
    for (int i = 0; i < kInstances; ++i) {
      const MotifInstance inst = RandomMotifInstance(rng, params);
      const ColoredGraph& g = inst.graph;
      const Motif& m = inst.motif;
      SolveOptions opts;
      opts.seed = DeriveSeed(1060 + variant, static_cast<std::uint64_t>(i));
      switch (variant) {
        case 0:
          record(tallies[0], as_opt(BruteGraphMotif(g, m)),
                 as_opt(DecideGraphMotif(g, m, opts).yes));
          break;
        case 1: {
          const int k = 1 + static_cast<int>(UniformBelow(rng, m.size()));
          record(tallies[1], as_opt(BruteMultisetMotif(g, m, k)),
                 as_opt(DecideMultisetMotif(g, m, k, opts).yes));
          break;
        }
        case 2:
          record(tallies[2], BruteMinAdd(g, m, 4), MinAdd(g, m, opts, 4).value);
          break;
        case 3:
          record(tallies[3], BruteMinCc(g, m), MinCc(g, m, opts).value);
          break;
        default:
          record(tallies[4], BruteMinSubstitute(g, m), MinSubstitute(g, m, opts).p);
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = seconds < 15 * 60;
  std::string detail;
  for (const Tally& t : tallies) {
    pass = pass && t.unsound == 0 && t.missed <= kInstances * 2 / 100;
    detail += Fmt("%s %d/%d yes, %d missed, %d unsound; ", t.name, t.yes_truth,
                  kInstances, t.missed, t.unsound);
  }
  detail += Fmt("%.1f s on one thread", seconds);
  return {pass, detail};
}

// 7. x1 x2 + x1 x2 cancels without multipliers and survives with them.
Outcome IsolationCheck() {
  Circuit c;
  const GateId x1 = c.NewInput(0), x2 = c.NewInput(1);
  c.NewAdd({c.NewMul(x1, x2), c.NewMul(x1, x2)});
  const FieldContext field(8);
  const FieldRing ring(field);
  int zero_plain = 0, nonzero_extended = 0;
  constexpr int kSeeds = 1000;
  for (int seed = 0; seed < kSeeds; ++seed) {
    Rng rng = MakeStream(static_cast<std::uint64_t>(seed), 0);
    std::uint32_t a = 0, b = 0;
    while (RankGf2(std::vector<std::uint32_t>{a, b}) < 2) {
      a = static_cast<std::uint32_t>(RandomBits(rng, 4));
      b = static_cast<std::uint32_t>(RandomBits(rng, 4));
    }
    using Elem = GroupAlgebraElement<FieldRing>;
    const std::vector<std::optional<Elem>> assign = {FromPair(ring, GroupVector{4, a}),
                                                     FromPair(ring, GroupVector{4, b})};
    zero_plain += IsZero(ring, Evaluate<FieldRing>(c, ring, EdgeMultipliers::Ones(c), assign));
    nonzero_extended += !IsZero(ring, Evaluate<FieldRing>(c, ring, Extend(c, field, rng), assign));
  }
  const bool pass = zero_plain == kSeeds && nonzero_extended >= kSeeds * 99 / 100;
  return {pass, Fmt("plain zero on %d/%d seeds; with multipliers nonzero on %d/%d (b=8)",
                    zero_plain, kSeeds, nonzero_extended, kSeeds)};
}

// 8. find_occurrence output always passes the occurrence checker.
Outcome WitnessValidity() {
  Rng rng(108);
  RandomInstanceParams params;
  params.planted_prob = 1.0;
  int instances = 0, found = 0, invalid = 0;
  while (instances < 100) {
    const MotifInstance inst = RandomMotifInstance(rng, params);
    if (!BruteGraphMotif(inst.graph, inst.motif)) continue;
    ++instances;
    SolveOptions opts;
    opts.seed = DeriveSeed(108, static_cast<std::uint64_t>(instances));
    const auto occ = FindOccurrence(inst.graph, inst.motif, opts);
    if (!occ) continue;
    ++found;
    invalid += !IsOccurrence(inst.graph, inst.motif, occ->vertices);
  }
  return {invalid == 0, Fmt("%d yes-instances, %d witnesses returned, %d invalid",
                            instances, found, invalid)};
}

// 9. Byte-identical JSON for 1 and 8 threads on the fixture suite.
Outcome ParallelDeterminism() {
  const std::string dir = CMLD_FIXTURE_DIR;
  auto f = [&](const char* name) { return dir + "/" + name; };
  const std::vector<std::vector<std::string>> suite = {
      {"decide", f("triangle.graph"), f("rgb.motif")},
      {"decide", f("two_edges.graph"), f("rrgg.motif")},
      {"decide", f("star.graph"), f("star.motif"), "--k", "2"},
      {"find", f("triangle.graph"), f("rgb.motif")},
      {"find", f("two_edges.graph"), f("rrgg.motif")},
      {"min-add", f("path_rbg.graph"), f("rg.motif")},
      {"min-cc", f("two_edges.graph"), f("rrgg.motif")},
      {"min-substitute", f("rrg_triangle.graph"), f("rgb.motif")},
      {"mld", f("pair.circuit"), "--k", "2"},
      {"mld", f("pair.circuit"), "--k", "2", "--colors", f("pair.colors"), "--motif",
       f("pair_mu2.motif")},
      {"selftest"},
  };
  int identical = 0, runs = 0;
  for (const auto& base : suite) {
    for (const char* seed : {"1", "42", "9001"}) {
      std::ostringstream out1, out8, err;
      auto one = base;
      one.insert(one.end(), {"--seed", seed, "--threads", "1"});
      auto eight = base;
      eight.insert(eight.end(), {"--seed", seed, "--threads", "8"});
      const int c1 = cli::Run(one, out1, err);
      const int c8 = cli::Run(eight, out8, err);
      ++runs;
      identical += c1 == 0 && c8 == 0 && out1.str() == out8.str();
    }
  }
  return {identical == runs,
          Fmt("%d/%d subcommand runs byte-identical across 1 and 8 threads", identical,
              runs)};
}

}  // namespace
}  // namespace cmld

int main() {
  using cmld::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"algebra identities", cmld::AlgebraIdentities},
      {"survival formula", cmld::SurvivalFormula},
      {"independence bound", cmld::IndependenceBound},
      {"repetition base", cmld::RepetitionBase},
      {"one-sided soundness", cmld::OneSidedSoundness},
      {"oracle equivalence", cmld::OracleEquivalence},
      {"isolation", cmld::IsolationCheck},
      {"witness validity", cmld::WitnessValidity},
      {"parallel determinism", cmld::ParallelDeterminism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("criterion %zu %s: %s [%s] (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.detail.c_str(), s);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
