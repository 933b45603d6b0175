#include "schubert/monoid_action.hpp"

#include "schubert/errors.hpp"

namespace schubert {

namespace {

struct Outcome {
  Clan clan;
  Rule rule;
};

int rank_of(const Clan& gamma) { return static_cast<int>(gamma.size() / 2); }

void check_letter(const Clan& gamma, int index) {
  if (index < 1 || index > rank_of(gamma)) {
    throw ArgumentError("simple reflection index " + std::to_string(index) +
                        " outside 1.." + std::to_string(rank_of(gamma)));
  }
}

// Cases for s_i, i < n, shared by both types. Positions i, i+1 and their
// mirrors 2n-i, 2n-i+1 are 0-based a, b, ma, mb.
Outcome act_inner(const Clan& gamma, int index, bool allow_double) {
  const std::size_t size = gamma.size();
  const std::size_t a = static_cast<std::size_t>(index) - 1;
  const std::size_t b = a + 1;
  const std::size_t ma = size - 1 - b;
  const std::size_t mb = size - 1 - a;

  const bool sign_arc = gamma.is_sign(a) && gamma.is_arc(b) && gamma.mate(b) > b;
  const bool arc_sign = gamma.is_arc(a) && gamma.is_sign(b) && gamma.mate(a) < a;
  const bool two_arcs = gamma.is_arc(a) && gamma.is_arc(b) && gamma.mate(a) != b;
  const bool mirrored = two_arcs && gamma.mate(a) == ma && gamma.mate(b) == mb;
  const bool ordered = two_arcs && !mirrored && gamma.mate(a) < gamma.mate(b);
  const bool opposite = gamma.is_sign(a) && gamma.is_sign(b) &&
                        gamma.is_plus(a) != gamma.is_plus(b);
  const bool double_case = allow_double && mirrored;

#ifndef NDEBUG
  const int fired = int{sign_arc} + int{arc_sign} + int{ordered} +
                    int{double_case} + int{opposite};
  if (fired > 1) {
    throw InvariantViolation("several action cases apply to " + gamma.to_string() +
                             " at s_" + std::to_string(index));
  }
#endif

  if (sign_arc) return {gamma.swapped(a, b).swapped(ma, mb), Rule::SignThenArc};
  if (arc_sign) return {gamma.swapped(a, b).swapped(ma, mb), Rule::ArcThenSign};
  if (ordered) return {gamma.swapped(a, b).swapped(ma, mb), Rule::OrderedArcs};
  if (double_case) return {gamma.swapped(a, b), Rule::MirroredArcs};
  if (opposite) return {gamma.joined(a, b).joined(ma, mb), Rule::OppositeSigns};
  return {gamma, Rule::Fixed};
}

Outcome act_last_c(const Clan& gamma) {
  const std::size_t a = gamma.size() / 2 - 1;
  const std::size_t b = a + 1;
  if (gamma.is_arc(a) && gamma.is_arc(b) && gamma.mate(a) != b &&
      gamma.mate(a) < gamma.mate(b)) {
    return {gamma.swapped(a, b), Rule::CentralArcs};
  }
  if (gamma.is_sign(a) && gamma.is_sign(b) && gamma.is_plus(a) != gamma.is_plus(b)) {
    return {gamma.joined(a, b), Rule::CentralSigns};
  }
  return {gamma, Rule::Fixed};
}

Clan flip_centre(const Clan& gamma) {
  const std::size_t n = gamma.size() / 2;
  return gamma.swapped(n - 1, n);
}

ActionStep make_step(const Clan& input, int index, Outcome outcome) {
  const bool moved = outcome.rule != Rule::Fixed;
  const bool is_double = outcome.rule == Rule::MirroredArcs;
  return {input, index, std::move(outcome.clan), moved, outcome.rule, is_double};
}

}  // namespace

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::Fixed:
      return "fixed";
    case Rule::SignThenArc:
      return "sign-then-arc";
    case Rule::ArcThenSign:
      return "arc-then-sign";
    case Rule::OrderedArcs:
      return "ordered-arcs";
    case Rule::MirroredArcs:
      return "mirrored-arcs";
    case Rule::OppositeSigns:
      return "opposite-signs";
    case Rule::CentralArcs:
      return "central-arcs";
    case Rule::CentralSigns:
      return "central-signs";
  }
  return "?";
}

ActionStep act_simple_c(int index, const Clan& gamma) {
  if (!is_skew_symmetric(gamma) || gamma.size() == 0) {
    throw ArgumentError("clan " + gamma.to_string() + " is not skew-symmetric");
  }
  check_letter(gamma, index);
  if (index < rank_of(gamma)) return make_step(gamma, index, act_inner(gamma, index, true));
  return make_step(gamma, index, act_last_c(gamma));
}

ActionStep act_simple_d(int index, const Clan& gamma) {
  if (!is_type_d_clan(gamma) || gamma.size() < 4) {
    throw ArgumentError("clan " + gamma.to_string() + " is not a type D clan");
  }
  check_letter(gamma, index);
  const int n = rank_of(gamma);
  if (index < n) return make_step(gamma, index, act_inner(gamma, index, false));
  auto outcome = act_inner(flip_centre(gamma), n - 1, false);
  outcome.clan = flip_centre(outcome.clan);
  return make_step(gamma, index, std::move(outcome));
}

ActionStep act_simple(GroupType type, int index, const Clan& gamma) {
  return type == GroupType::C ? act_simple_c(index, gamma) : act_simple_d(index, gamma);
}

WordAction act_word(GroupType type, std::span<const int> word, const Clan& gamma,
                    bool strict) {
  if (strict && !is_reduced(type, rank_of(gamma), word)) {
    throw ArgumentError("word " + to_string(word) + " is not reduced");
  }
  WordAction result{gamma, 0, 0};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto step = act_simple(type, *it, result.clan);
    if (step.is_double) ++result.doubles;
    if (step.moved) ++result.moves;
    result.clan = std::move(step.output);
  }
  return result;
}

}  // namespace schubert
