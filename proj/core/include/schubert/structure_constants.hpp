#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubert/clan.hpp"
#include "schubert/richardson.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Coefficient of S_w in S_u * S_v for a pair of signed shuffles. Zero when
/// the lengths do not add up, when w0 u is not above v, or when w does not
/// carry the pair's clan to the dense orbit. Throws UnsupportedPair when
/// (u, v) is not a pair of signed shuffles; that is not a claim that the
/// constant vanishes.
std::uint64_t schubert_constant(const SignedPermutation& u, const SignedPermutation& v,
                                const SignedPermutation& w);

struct SchubertProduct {
  GroupType type;
  int rank;
  SignedPermutation u;
  SignedPermutation v;
  std::map<SignedPermutation, std::uint64_t> terms;
};

/// All nonzero terms of S_u * S_v. Candidates are split across the given
/// number of threads; the result does not depend on it.
SchubertProduct schubert_product(const SignedPermutation& u, const SignedPermutation& v,
                                 unsigned threads = 1);

/// One candidate w of the right length, with the clan it reaches.
struct ProductRow {
  SignedPermutation w;
  Word word;
  Clan reached;
  int doubles;
  std::uint64_t coefficient;
};

/// Every w with l(w) = l(u) + l(v), in lexicographic order of reduced words.
/// Throws UnsupportedPair or ArgumentError (empty Richardson variety).
std::vector<ProductRow> product_rows(const SignedPermutation& u, const SignedPermutation& v);

/// {"type","rank","u","v","terms":[{"w","word","coeff"}]}
std::string to_json(const SchubertProduct& product);

}  // namespace schubert
