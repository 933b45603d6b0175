#pragma once

#include <gmpxx.h>

#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "schubert/polynomial.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Integer coefficient vector of a root in the coordinates x_1..x_n.
using Root = std::vector<int>;

struct RootSystem {
  GroupType type;
  int rank;
  std::vector<Root> simple_roots;
  std::vector<Root> positive_roots;
  std::size_t weyl_order;
};

/// Simple roots x_i - x_{i+1} for i < n, and 2x_n (C) or x_{n-1} + x_n (D).
RootSystem make_root_system(GroupType type, int rank);

/// s_alpha applied to the variables of f. Throws ArgumentError unless alpha
/// is a root of the system.
Polynomial reflect(const RootSystem& system, const Root& alpha, const Polynomial& f);
/// (f - s_alpha f) / alpha.
Polynomial divided_difference(const RootSystem& system, const Root& alpha,
                              const Polynomial& f);
/// Divided difference for the simple root alpha_i.
Polynomial divided_difference(const RootSystem& system, int index, const Polynomial& f);
/// d_{i1} d_{i2} ... d_{ik} f, so the last letter is applied first.
Polynomial apply_word(const RootSystem& system, std::span<const int> word, Polynomial f);

/// Product of the positive roots.
Polynomial positive_root_product(const RootSystem& system);

/// Schubert classes in the coinvariant algebra, normalized so that
/// B_{w0} = (1/|W|) prod alpha and B_{w s_i} = d_i B_w whenever w s_i < w.
/// Representatives are memoized; concurrent queries are safe.
class BggOracle {
 public:
  static constexpr int kMaxRank = 5;

  BggOracle(GroupType type, int rank);

  const RootSystem& root_system() const { return system_; }
  const Polynomial& representative(const SignedPermutation& w) const;
  /// d_word(B_{w0}) for a reduced word of w^{-1} w0. Not memoized.
  Polynomial representative_via_word(std::span<const int> word) const;

  /// d_w(B_u B_v). Throws ArgumentError if l(w) != l(u) + l(v), and
  /// InvariantViolation unless the result is a nonnegative integer constant.
  mpq_class oracle_constant(const SignedPermutation& u, const SignedPermutation& v,
                            const SignedPermutation& w) const;

  /// Computes every representative up front.
  void precompute_all() const;
  std::size_t cached_count() const;

  /// JSON snapshot of the memo, for on-disk caching.
  std::string export_representatives() const;
  /// Loads a snapshot produced by export_representatives for the same group.
  /// Throws ParseError on malformed or mismatched input.
  void import_representatives(std::string_view text) const;

 private:
  void check_element(const SignedPermutation& w) const;

  RootSystem system_;
  SignedPermutation w0_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<SignedPermutation, std::unique_ptr<const Polynomial>> memo_;
};

}  // namespace schubert
