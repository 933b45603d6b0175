#pragma once

#include <span>

#include "schubert/clan.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Which case of the action fired. The first five are the cases for s_i
/// with i < n; the last two are the type C cases for s_n.
enum class Rule {
  Fixed,
  SignThenArc,     ///< sign at i, arc at i+1 whose mate lies to the right
  ArcThenSign,     ///< arc at i whose mate lies to the left, sign at i+1
  OrderedArcs,     ///< two arcs with mate(i) < mate(i+1), not mirror images
  MirroredArcs,    ///< two arcs with mates at 2n+1-i and 2n-i: double edge
  OppositeSigns,   ///< opposite signs become arcs
  CentralArcs,     ///< s_n on two arcs with mate(n) < mate(n+1)
  CentralSigns,    ///< s_n on opposite signs
};

const char* to_string(Rule rule);

struct ActionStep {
  Clan input;
  int letter;
  Clan output;
  bool moved;
  Rule rule;
  bool is_double;
};

/// s_i acting on a skew-symmetric (n,n)-clan.
ActionStep act_simple_c(int index, const Clan& gamma);
/// s_i acting on a type D clan; s_n is s_{n-1} conjugated by the swap of
/// positions n and n+1.
ActionStep act_simple_d(int index, const Clan& gamma);
ActionStep act_simple(GroupType type, int index, const Clan& gamma);

struct WordAction {
  Clan clan;
  int doubles;
  /// Letters that changed the clan. Equal to the word length exactly when
  /// every step climbs one edge of the weak order graph.
  int moves;
};

/// Applies the word right to left: the last letter acts first. In strict
/// mode a non-reduced word throws ArgumentError.
WordAction act_word(GroupType type, std::span<const int> word, const Clan& gamma,
                    bool strict = false);

}  // namespace schubert
