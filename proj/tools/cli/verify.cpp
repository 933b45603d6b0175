#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "schubert/richardson.hpp"
#include "schubert/structure_constants.hpp"

namespace schubert::cli {

VerifyReport verify_against_oracle(GroupType type, int rank, const VerifyOptions& options,
                                   const BggOracle& oracle) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;

  struct Triple {
    std::size_t pair;
    const SignedPermutation* w;
  };
  const auto pairs = enumerate_shuffle_pairs(type, rank);
  std::vector<Triple> triples;
  report.pairs = pairs.size();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!richardson_nonempty(pairs[p].u, pairs[p].v)) continue;
    ++report.qualifying_pairs;
    const int target = length(pairs[p].u) + length(pairs[p].v);
    for (const auto& w : enumerate_by_length(type, rank, target)) triples.push_back({p, &w});
  }

  if (options.sample != 0 && options.sample < triples.size()) {
    // Partial Fisher-Yates with plain modulo keeps the sample identical
    // across standard library implementations.
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.sample; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (triples.size() - i));
      std::swap(triples[i], triples[j]);
    }
    triples.resize(options.sample);
    std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
      return a.pair != b.pair ? a.pair < b.pair : *a.w < *b.w;
    });
  }

  for (const auto& t : triples) {
    const auto& pair = pairs[t.pair];
    const auto rule = schubert_constant(pair.u, pair.v, *t.w);
    const auto expected = oracle.oracle_constant(pair.u, pair.v, *t.w);
    ++report.triples;
    if (rule != 0) ++report.nonzero;
    if (mpq_class(static_cast<unsigned long>(rule)) != expected) {
      report.mismatches.push_back(
          {pair.u.to_string(), pair.v.to_string(), t.w->to_string(), rule, expected.get_str()});
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace schubert::cli
