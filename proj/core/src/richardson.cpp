#include "schubert/richardson.hpp"

#include <algorithm>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void require_avoids_crossing(const Clan& gamma) {
  if (!avoids_pattern(gamma, crossing_pattern())) {
    throw ArgumentError("clan " + gamma.to_string() + " contains the pattern (1,2,1,2)");
  }
}

int plus_side(const Clan& gamma) { return gamma.plus_count() + gamma.arc_count(); }

// Positive entries are 1..cut in increasing order; the negative entries are
// -n, -(n-1), ..., -(cut+1) in that order.
std::optional<int> signed_shuffle_cut(const SignedPermutation& w) {
  const int n = w.rank();
  int next_positive = 1;
  int next_negative = -n;
  for (int x : w.images()) {
    if (x > 0) {
      if (x != next_positive) return std::nullopt;
      ++next_positive;
    } else {
      if (x != next_negative) return std::nullopt;
      ++next_negative;
    }
  }
  return next_positive - 1;
}

// Odd rank type D: 1..j increasing, shuffled with n, -(n-1), ..., -(j+1).
std::optional<int> odd_shuffle_cut(const SignedPermutation& w) {
  const int n = w.rank();
  std::vector<int> low;
  std::vector<int> high;
  for (int x : w.images()) (x > 0 && x < n ? low : high).push_back(x);
  const int j = static_cast<int>(low.size());
  for (int i = 0; i < j; ++i) {
    if (low[i] != i + 1) return std::nullopt;
  }
  if (high.empty() || high.front() != n) return std::nullopt;
  for (std::size_t i = 1; i < high.size(); ++i) {
    if (high[i] != -(n - static_cast<int>(i))) return std::nullopt;
  }
  return j;
}

}  // namespace

Permutation u_of_clan(const Clan& gamma) {
  require_avoids_crossing(gamma);
  const int size = static_cast<int>(gamma.size());
  int low = plus_side(gamma);
  int high = size;
  std::vector<int> out(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const bool low_side = gamma.is_plus(i) || (gamma.is_arc(i) && gamma.mate(i) < i);
    out[i] = low_side ? low-- : high--;
  }
  return Permutation(std::move(out));
}

Permutation v_of_clan(const Clan& gamma) {
  require_avoids_crossing(gamma);
  const int p = plus_side(gamma);
  int low = 1;
  int high = p + 1;
  std::vector<int> out(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const bool low_side = gamma.is_plus(i) || (gamma.is_arc(i) && gamma.mate(i) > i);
    out[i] = low_side ? low++ : high++;
  }
  return Permutation(std::move(out));
}

Clan clan_of_pair(const Permutation& u, const Permutation& v, std::optional<int> p_given) {
  if (u.size() != v.size()) {
    throw ArgumentError("clan_of_pair needs two permutations of the same size");
  }
  if (!p_given && u.size() % 2 != 0) {
    throw ArgumentError("clan_of_pair needs p for permutations of odd size");
  }
  const int p = p_given.value_or(u.size() / 2);
  if (p < 0 || p > u.size()) throw ArgumentError("p is outside 0.." + std::to_string(u.size()));
  std::vector<Symbol> raw;
  std::vector<int> open;
  int next_label = 1;
  for (int i = 1; i <= u.size(); ++i) {
    const bool u_low = u(i) <= p;
    const bool v_low = v(i) <= p;
    if (u_low && v_low) {
      raw.push_back(Symbol::plus());
    } else if (!u_low && !v_low) {
      raw.push_back(Symbol::minus());
    } else if (!u_low) {
      raw.push_back(Symbol::arc(next_label));
      open.push_back(next_label++);
    } else {
      if (open.empty()) {
        throw ArgumentError("(" + u.to_string() + ", " + v.to_string() +
                            ") does not give an FS-pattern: S at position " +
                            std::to_string(i) + " has no open F");
      }
      raw.push_back(Symbol::arc(open.back()));
      open.pop_back();
    }
  }
  if (!open.empty()) {
    throw ArgumentError("(" + u.to_string() + ", " + v.to_string() +
                        ") leaves an unmatched F in its FS-pattern");
  }
  return normalize(raw, std::pair{p, u.size() - p});
}

const char* to_string(ShuffleKind kind) {
  switch (kind) {
    case ShuffleKind::TypeC:
      return "type C";
    case ShuffleKind::TypeDEven:
      return "type D (even rank)";
    case ShuffleKind::TypeDOdd:
      return "type D (odd rank)";
  }
  return "?";
}

std::optional<ShufflePair> classify_pair(const SignedPermutation& u,
                                         const SignedPermutation& v) {
  if (u.type() != v.type()) throw ArgumentError("group type mismatch");
  if (u.rank() != v.rank()) throw ArgumentError("rank mismatch");
  const int n = u.rank();
  const auto k = signed_shuffle_cut(v);
  if (!k) return std::nullopt;
  if (u.type() == GroupType::C) {
    const auto j = signed_shuffle_cut(u);
    if (!j) return std::nullopt;
    return ShufflePair{u, v, ShuffleKind::TypeC, *j, *k};
  }
  if ((n - *k) % 2 != 0) return std::nullopt;
  const bool odd = n % 2 != 0;
  const auto j = odd ? odd_shuffle_cut(u) : signed_shuffle_cut(u);
  if (!j || *j % 2 != 0) return std::nullopt;
  return ShufflePair{u, v, odd ? ShuffleKind::TypeDOdd : ShuffleKind::TypeDEven, *j, *k};
}

std::vector<ShufflePair> enumerate_shuffle_pairs(GroupType type, int rank) {
  const auto identity = SignedPermutation::identity(type, rank);
  std::vector<SignedPermutation> firsts;
  std::vector<SignedPermutation> seconds;
  for (const auto& w : all_elements(type, rank)) {
    if (classify_pair(w, identity)) firsts.push_back(w);
    if (classify_pair(identity, w)) seconds.push_back(w);
  }
  std::vector<ShufflePair> out;
  for (const auto& u : firsts) {
    for (const auto& v : seconds) {
      if (auto pair = classify_pair(u, v)) out.push_back(std::move(*pair));
    }
  }
  return out;
}

bool richardson_nonempty(const SignedPermutation& u, const SignedPermutation& v) {
  return bruhat_leq(v, long_element(u.type(), u.rank()) * u);
}

std::optional<Clan> cross_mirror_arcs(const Clan& gamma) {
  const std::size_t size = gamma.size();
  std::vector<std::size_t> centred;
  for (std::size_t i = 0; i < size / 2; ++i) {
    if (gamma.is_arc(i) && gamma.mate(i) == size - 1 - i) centred.push_back(i);
  }
  if (centred.size() % 2 != 0) return std::nullopt;
  auto raw = gamma.symbols();
  for (std::size_t t = 0; t < centred.size(); t += 2) {
    const std::size_t a = centred[t];
    const std::size_t b = centred[t + 1];
    const int label_a = raw[a].label;
    raw[size - 1 - a] = Symbol::arc(raw[b].label);
    raw[size - 1 - b] = Symbol::arc(label_a);
  }
  return normalize(raw);
}

Clan pair_to_clan(const ShufflePair& pair) {
  const GroupType type = pair.u.type();
  const int n = pair.u.rank();
  const auto w0u = long_element(type, n) * pair.u;
  if (!bruhat_leq(pair.v, w0u)) {
    throw ArgumentError("w0*u = " + w0u.to_string() + " is not above v = " +
                        pair.v.to_string() + "; the Richardson variety is empty");
  }
  auto gamma = clan_of_pair(embed(w0u), embed(pair.v));
  if (type == GroupType::D && !is_type_d_clan(gamma)) {
    if (auto crossed = cross_mirror_arcs(gamma)) gamma = std::move(*crossed);
  }
  if (!is_orbit_clan(type, gamma)) {
    throw InvariantViolation("clan " + gamma.to_string() + " for (" + pair.u.to_string() +
                             ", " + pair.v.to_string() + ") fails the orbit predicate");
  }
  return gamma;
}

std::optional<ShufflePair> pair_of_clan(GroupType type, const Clan& gamma) {
  if (gamma.size() % 2 != 0 || !avoids_pattern(gamma, crossing_pattern())) {
    return std::nullopt;
  }
  const int n = static_cast<int>(gamma.size() / 2);
  const auto w0 = embed(long_element(type, n));
  const auto u = unembed(w0.inverse() * u_of_clan(gamma), type);
  const auto v = unembed(v_of_clan(gamma), type);
  if (!u || !v) return std::nullopt;
  return classify_pair(*u, *v);
}

}  // namespace schubert
