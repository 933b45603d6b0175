#pragma once

#include <optional>
#include <vector>

#include "schubert/clan.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// u(gamma): positions holding + or a second arc endpoint receive p, p-1, ...
/// from left to right, the others receive p+q, p+q-1, ...
/// Throws ArgumentError if gamma contains the pattern (1,2,1,2).
Permutation u_of_clan(const Clan& gamma);
/// v(gamma): positions holding + or a first arc endpoint receive 1..p from
/// left to right, the others receive p+1..p+q.
Permutation v_of_clan(const Clan& gamma);

/// The clan whose Richardson pair is (u, v). The first argument is already
/// the composite w0 u, so that u_of_clan(result) == u. Uses the FS-pattern
/// for a (p,q)-pair, p defaulting to half the size, and matches each S with the nearest open F to its
/// left. Throws ArgumentError when the pattern cannot be completed, which
/// happens when u is not above v in Bruhat order.
Clan clan_of_pair(const Permutation& u, const Permutation& v,
                  std::optional<int> p = std::nullopt);

enum class ShuffleKind { TypeC, TypeDEven, TypeDOdd };

const char* to_string(ShuffleKind kind);

/// A pair (u, v) to which the orbit rule applies. u_cut and v_cut are the
/// numbers of positive entries taken from the initial segments 1..j and 1..k.
struct ShufflePair {
  SignedPermutation u;
  SignedPermutation v;
  ShuffleKind kind;
  int u_cut;
  int v_cut;
};

/// Recognizes pairs of signed shuffles; anything else yields nullopt.
std::optional<ShufflePair> classify_pair(const SignedPermutation& u,
                                         const SignedPermutation& v);

/// Every pair of signed shuffles of the group, ordered by (u, v).
std::vector<ShufflePair> enumerate_shuffle_pairs(GroupType type, int rank);

/// True when w0 u >= v in the Bruhat order of the pair's group.
bool richardson_nonempty(const SignedPermutation& u, const SignedPermutation& v);

/// For a skew-symmetric clan, pairs up the arcs joining i and 2n+1-i (in
/// order of left endpoint) and crosses each pair: arcs a-a' and b-b' become
/// a-b' and b-a'. Empty when the number of such arcs is odd.
std::optional<Clan> cross_mirror_arcs(const Clan& gamma);

/// Orbit clan of the Richardson variety for the pair, built from
/// (w0' u', v') with w0' the embedded long element of W. In type D the
/// recipe may produce arcs joining mirrored positions; those are crossed
/// with cross_mirror_arcs. Throws ArgumentError when w0 u is not above v and
/// InvariantViolation if the result fails the orbit predicate.
Clan pair_to_clan(const ShufflePair& pair);

/// Inverse direction: the signed pair (u, v) with w0' u' = u(gamma) and
/// v' = v(gamma), classified. Empty when gamma contains (1,2,1,2) or the
/// permutations are not in the image of W.
std::optional<ShufflePair> pair_of_clan(GroupType type, const Clan& gamma);

}  // namespace schubert
