#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/bgg.hpp"
#include "schubert/weyl.hpp"

namespace schubert::cli {

struct VerifyOptions {
  /// 0 checks every triple; otherwise a deterministic sample of this size.
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

struct VerifyMismatch {
  std::string u;
  std::string v;
  std::string w;
  std::uint64_t rule;
  std::string oracle;
};

struct VerifyReport {
  std::size_t pairs = 0;
  /// Pairs with w0 u >= v.
  std::size_t qualifying_pairs = 0;
  std::size_t triples = 0;
  std::size_t nonzero = 0;
  std::vector<VerifyMismatch> mismatches;
  double seconds = 0;

  bool ok() const { return mismatches.empty(); }
};

/// Compares the orbit rule with the divided-difference oracle on triples
/// (u, v, w) where (u, v) is a pair of signed shuffles with w0 u >= v and
/// l(w) = l(u) + l(v).
VerifyReport verify_against_oracle(GroupType type, int rank, const VerifyOptions& options,
                                   const BggOracle& oracle);

}  // namespace schubert::cli
