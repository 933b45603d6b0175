#include <chrono>
#include <set>

#include "reference_tables.hpp"
#include "schubert/clan.hpp"
#include "schubert/monoid_action.hpp"
#include "schubert/richardson.hpp"
#include "schubert/structure_constants.hpp"

namespace schubert::cli {

TableCheck check_table(const ReferenceTable& table) {
  const auto start = std::chrono::steady_clock::now();
  TableCheck check;
  check.name = std::string(table.name);

  const auto u = SignedPermutation::parse(table.type, table.u);
  const auto v = SignedPermutation::parse(table.type, table.v);
  const auto pair = classify_pair(u, v);
  if (!pair) {
    check.problems.push_back("(u, v) is not a pair of signed shuffles");
    return check;
  }
  const auto gamma = pair_to_clan(*pair);
  const int target = length(u) + length(v);

  std::set<SignedPermutation> seen;
  for (const auto& row : table.rows) {
    ++check.rows;
    const auto word = parse_word(row.word);
    const auto w = evaluate_word(table.type, table.rank, word);
    if (length(w) != static_cast<int>(word.size()) || length(w) != target) {
      check.problems.push_back("word [" + std::string(row.word) +
                               "] is not a reduced word of the right length");
    }
    if (!seen.insert(w).second) {
      check.problems.push_back("word [" + std::string(row.word) + "] repeats an element");
    }
    const auto reached = act_word(table.type, word, gamma).clan;
    const auto coefficient = schubert_constant(u, v, w);
    if (coefficient != 0) ++check.nonzero;
    const auto expected = Clan::parse(row.clan);
    if (reached != expected || coefficient != static_cast<std::uint64_t>(row.coefficient)) {
      check.mismatches.push_back({std::string(row.word), expected.to_string(),
                                  reached.to_string(), row.coefficient, coefficient});
    }
  }
  for (const auto& w : enumerate_by_length(table.type, table.rank, target)) {
    if (!seen.count(w)) {
      check.problems.push_back("element " + w.to_string() + " of length " +
                               std::to_string(target) + " is missing");
    }
  }
  check.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check;
}

}  // namespace schubert::cli
