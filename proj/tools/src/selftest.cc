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

#include "selftest.h"

#include <cmath>
#include <sstream>
#include <string>

#include "cmld/assignment.h"
#include "cmld/group_algebra.h"
#include "cmld/motif.h"
#include "cmld/oracle.h"
#include "cmld/random_instances.h"

namespace cmld::cli {
namespace {

using Json = nlohmann::ordered_json;

Json Check(const std::string& name, bool pass, const std::string& detail) {
  return Json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

// prod_i (v0 + v_i) is nonzero exactly when the v_i are independent.
Json AnnihilationCheck(Rng& rng) {
  int mismatches = 0;
  constexpr int kCases = 500;
  for (int i = 0; i < kCases; ++i) {
    const int k = 2 + static_cast<int>(UniformBelow(rng, 7));
    const FieldRing ring{FieldContext(8)};
    const int count = 1 + static_cast<int>(UniformBelow(rng, k));
    std::vector<std::uint32_t> rows(count);
    auto prod = Identity(ring, k);
    for (auto& r : rows) {
      r = static_cast<std::uint32_t>(RandomBits(rng, k));
      prod = MulByPair(ring, prod, GroupVector{k, r});
    }
    mismatches += IsZero(ring, prod) == (RankGf2(rows) == count);
  }
  return Check("annihilation", mismatches == 0,
               std::to_string(kCases) + " products, " +
                   std::to_string(mismatches) + " disagree with GF(2) rank");
}

Json SurvivalCheck(Rng& rng) {
  constexpr int kTrials = 20000;
  bool pass = true;
  std::ostringstream detail;
  for (int t : {2, 3, 4}) {
    int survived = 0;
    for (int i = 0; i < kTrials; ++i) {
      const SubspaceFamily f = SampleSubspaces(std::vector<int>{t}, 8, rng);
      std::vector<std::uint32_t> rows;
      for (int j = 0; j < t; ++j) rows.push_back(SampleVector(f, 0, rng).bits);
      survived += RankGf2(rows) == t;
    }
    const double rate = static_cast<double>(survived) / kTrials;
    const double exact = SurvivalProbabilityDouble(t);
    pass = pass && std::abs(rate - exact) <= 0.03;
    detail << (t > 2 ? ", " : "") << "p" << t << " " << rate << " vs " << exact;
  }
  return Check("survival", pass, detail.str());
}

Json OracleCheck(Rng& rng, const SolveOptions& base) {
  RandomInstanceParams params;
  params.max_vertices = 8;
  params.max_k = 4;
  int unsound = 0, misses = 0;
  constexpr int kInstances = 20;
  for (int i = 0; i < kInstances; ++i) {
    const MotifInstance inst = RandomMotifInstance(rng, params);
    const ColoredGraph& g = inst.graph;
    const Motif& m = inst.motif;
    SolveOptions opts = base;
    opts.seed = DeriveSeed(base.seed, static_cast<std::uint64_t>(i));

    const bool motif = BruteGraphMotif(g, m);
    const bool got = DecideGraphMotif(g, m, opts).yes;
    unsound += got && !motif;
    misses += motif && !got;

    auto compare = [&](std::optional<int> truth, std::optional<int> found) {
      unsound += found && (!truth || *found < *truth);
      misses += truth != found && !(found && (!truth || *found < *truth));
    };
    compare(BruteMinAdd(g, m, 3), MinAdd(g, m, opts, 3).value);
    compare(BruteMinCc(g, m), MinCc(g, m, opts).value);
    compare(BruteMinSubstitute(g, m), MinSubstitute(g, m, opts).p);
  }
  return Check("oracle_equivalence", unsound == 0 && misses <= 2,
               std::to_string(kInstances) + " instances x 4 variants, " +
                   std::to_string(unsound) + " unsound, " +
                   std::to_string(misses) + " missed");
}

}  // namespace

Json RunSelfTest(const SolveOptions& options) {
  Rng rng(DeriveSeed(options.seed, 0x5e1f));
  Json checks = Json::array();
  checks.push_back(AnnihilationCheck(rng));
  checks.push_back(SurvivalCheck(rng));
  checks.push_back(OracleCheck(rng, options));
  bool pass = true;
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  return Json{{"checks", std::move(checks)}, {"pass", pass}, {"seed", options.seed}};
}

}  // namespace cmld::cli
