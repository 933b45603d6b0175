#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

/// One symbol of a clan before normalization. Arc labels are arbitrary
/// positive integers; two symbols sharing a label are mates.
struct Symbol {
  enum class Kind : char { Plus, Minus, Arc };
  Kind kind;
  int label = 0;

  static Symbol plus() { return {Kind::Plus, 0}; }
  static Symbol minus() { return {Kind::Minus, 0}; }
  static Symbol arc(int label) { return {Kind::Arc, label}; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// A clan in canonical form. Each position holds a sign or the index of its
/// mate, so two clans are equal exactly when they are equal up to relabeling.
class Clan {
 public:
  Clan() = default;

  /// Accepts "+-1221+-", "+,-,1,2,2,1,+,-" or "(1,2,1,2)". Both '-' and the
  /// Unicode minus sign are read as a minus.
  static Clan parse(std::string_view text);

  std::size_t size() const { return cells_.size(); }
  bool is_plus(std::size_t i) const { return cells_[i] == kPlus; }
  bool is_minus(std::size_t i) const { return cells_[i] == kMinus; }
  bool is_sign(std::size_t i) const { return cells_[i] < 0; }
  bool is_arc(std::size_t i) const { return cells_[i] >= 0; }
  /// Position of the mate of an arc endpoint (0-based).
  std::size_t mate(std::size_t i) const { return static_cast<std::size_t>(cells_[i]); }

  int plus_count() const;
  int minus_count() const;
  int arc_count() const;

  /// Canonical symbols: arcs labelled 1, 2, ... by first occurrence.
  std::vector<Symbol> symbols() const;
  /// Canonical comma form, e.g. "+,-,1,2,2,1,+,-".
  std::string to_string() const;

  /// Copy with the characters at positions a and b interchanged.
  Clan swapped(std::size_t a, std::size_t b) const;
  /// Copy in which the signs at positions a and b become a new arc.
  Clan joined(std::size_t a, std::size_t b) const;

  friend Clan normalize(std::span<const Symbol> raw,
                        std::optional<std::pair<int, int>> pq);
  friend auto operator<=>(const Clan&, const Clan&) = default;
  friend struct std::hash<Clan>;

 private:
  static constexpr int kPlus = -1;
  static constexpr int kMinus = -2;

  explicit Clan(std::vector<int> cells) : cells_(std::move(cells)) {}

  std::vector<int> cells_;
};

/// Canonical clan of a raw symbol string. When (p, q) is given, the sign
/// difference #plus - #minus must equal p - q and the length p + q.
Clan normalize(std::span<const Symbol> raw,
               std::optional<std::pair<int, int>> pq = std::nullopt);

/// True when no subsequence of positions of gamma forms a clan equal to
/// pattern.
bool avoids_pattern(const Clan& gamma, const Clan& pattern);

/// The pattern (1,2,1,2).
const Clan& crossing_pattern();

bool is_skew_symmetric(const Clan& gamma);
/// Skew-symmetric, with no arc joining i and 2n+1-i, and an even total of
/// minus signs plus arcs inside the first half.
bool is_type_d_clan(const Clan& gamma);
/// The predicate matching a group type.
bool is_orbit_clan(GroupType type, const Clan& gamma);

/// Clan of the open dense orbit.
Clan dense_orbit_clan(GroupType type, int rank);

/// Every clan indexing an orbit for the given type, sorted.
std::vector<Clan> enumerate_clans(GroupType type, int rank);

}  // namespace schubert

template <>
struct std::hash<schubert::Clan> {
  std::size_t operator()(const schubert::Clan& c) const noexcept;
};
