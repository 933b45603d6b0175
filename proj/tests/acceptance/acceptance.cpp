// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "reference_tables.hpp"
#include "schubert/bgg.hpp"
#include "schubert/clan.hpp"
#include "schubert/monoid_action.hpp"
#include "schubert/richardson.hpp"
#include "schubert/structure_constants.hpp"
#include "schubert/weak_order_graph.hpp"
#include "verify.hpp"

using namespace schubert;

namespace {

/// Collects failure notes for one criterion.
struct Findings {
  std::ostringstream notes;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures < 5) notes << "\n    - " << what;
    ++failures;
  }
};

int failed_criteria = 0;

void criterion(int number, const std::string& title,
               const std::function<std::string(Findings&)>& body) {
  Findings findings;
  const auto start = std::chrono::steady_clock::now();
  std::string summary;
  try {
    summary = body(findings);
  } catch (const std::exception& e) {
    findings.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = findings.failures == 0;
  if (!pass) ++failed_criteria;
  std::printf("%s %d %s: %s [%.3f s]%s\n", pass ? "PASS" : "FAIL", number, title.c_str(),
              summary.c_str(), seconds, findings.notes.str().c_str());
  std::fflush(stdout);
}

const cli::ReferenceTable& table(std::string_view name) {
  for (const auto& t : cli::reference_tables()) {
    if (t.name == name) return t;
  }
  throw std::runtime_error("missing reference table");
}

std::string reproduce(Findings& f, std::string_view name, std::size_t rows,
                      const std::map<std::string, std::uint64_t>& nonzero, double limit) {
  const auto& t = table(name);
  const auto check = cli::check_table(t);
  f.expect(check.ok(), std::string(name) + " differs from the golden rows");
  for (const auto& m : check.mismatches) {
    f.expect(false, "[" + m.word + "] expected (" + m.expected_clan + ") " +
                        std::to_string(m.expected_coefficient) + ", got (" + m.actual_clan +
                        ") " + std::to_string(m.actual_coefficient));
  }
  for (const auto& p : check.problems) f.expect(false, p);
  f.expect(check.rows == rows, "row count " + std::to_string(check.rows));
  f.expect(check.seconds < limit, "too slow");

  // The nonzero rows recomputed directly, independent of the fixture.
  const auto u = SignedPermutation::parse(t.type, t.u);
  const auto v = SignedPermutation::parse(t.type, t.v);
  std::map<std::string, std::uint64_t> got;
  for (const auto& w : enumerate_by_length(t.type, t.rank, length(u) + length(v))) {
    if (const auto c = schubert_constant(u, v, w); c != 0) {
      got[to_string(std::span<const int>(reduced_word(w)))] = c;
    }
  }
  std::map<std::string, std::uint64_t> expected;
  for (const auto& [word, c] : nonzero) {
    const auto w = evaluate_word(t.type, t.rank, parse_word(word));
    expected[to_string(std::span<const int>(reduced_word(w)))] = c;
  }
  f.expect(got == expected, "nonzero constants differ from the listed rows");

  std::ostringstream s;
  s << check.rows << " rows, " << check.nonzero << " nonzero, " << check.mismatches.size()
    << " mismatches";
  return s.str();
}

std::string oracle_equivalence(Findings& f) {
  struct Run {
    GroupType type;
    int rank;
    std::size_t sample;
  };
  const Run runs[] = {{GroupType::C, 2, 0},
                      {GroupType::C, 3, 0},
                      {GroupType::D, 3, 0},
                      {GroupType::C, 4, 200},
                      {GroupType::D, 4, 200}};
  std::ostringstream s;
  double total = 0;
  for (const auto& run : runs) {
    BggOracle oracle(run.type, run.rank);
    cli::VerifyOptions options;
    options.sample = run.sample;
    const auto report = cli::verify_against_oracle(run.type, run.rank, options, oracle);
    const auto name = to_string(GroupSpec{run.type, run.rank});
    for (const auto& m : report.mismatches) {
      f.expect(false, name + " u=" + m.u + " v=" + m.v + " w=" + m.w + ": rule " +
                          std::to_string(m.rule) + ", oracle " + m.oracle);
    }
    if (run.sample != 0) f.expect(report.triples == run.sample, name + " sample size");
    f.expect(report.triples > 0, name + " checked nothing");
    total += report.seconds;
    s << name << (run.sample == 0 ? " exhaustive " : " sample ") << report.triples << "/"
      << report.mismatches.size() << "  ";
  }
  f.expect(total < 600, "exceeds ten minutes");
  s << "(triples/mismatches)";
  return s.str();
}

// The criterion asks for agreement of both the clan and the double-edge
// count on every reduced word. The count is only guaranteed to agree when
// each letter climbs an edge; the breakdown separates the two situations.
std::string word_independence(Findings& f) {
  std::size_t checks = 0, clan_violations = 0, climbing_violations = 0, stalled_violations = 0;
  for (auto type : {GroupType::C, GroupType::D}) {
    const auto clans = enumerate_clans(type, 3);
    for (int l = 0; l <= 5; ++l) {
      for (const auto& w : enumerate_by_length(type, 3, l)) {
        const auto words = all_reduced_words(w);
        for (const auto& gamma : clans) {
          const auto first = act_word(type, words.front(), gamma, true);
          for (const auto& word : words) {
            const auto next = act_word(type, word, gamma, true);
            ++checks;
            const bool same_clan = next.clan == first.clan;
            const bool same_doubles = next.doubles == first.doubles;
            if (!same_clan) ++clan_violations;
            if (!same_doubles) {
              ++(first.moves == l && next.moves == l ? climbing_violations : stalled_violations);
            }
            f.expect(same_clan && same_doubles,
                     to_string(GroupSpec{type, 3}) + " w=" + w.to_string() + " on " +
                         gamma.to_string() + ": " + to_string(std::span<const int>(word)) +
                         " gives D=" + std::to_string(next.doubles) + ", " +
                         to_string(std::span<const int>(words.front())) + " gives D=" +
                         std::to_string(first.doubles));
          }
        }
      }
    }
  }
  std::ostringstream s;
  s << checks << " checks; clan disagreements " << clan_violations
    << "; D disagreements on climbing paths " << climbing_violations
    << "; D disagreements on paths with a trivial step " << stalled_violations;
  return s.str();
}

std::string element_counts(Findings& f) {
  const auto c4 = enumerate_by_length(GroupType::C, 4, 7).size();
  const auto d4 = enumerate_by_length(GroupType::D, 4, 4).size();
  const auto d3 = enumerate_by_length(GroupType::D, 3, 3).size();
  f.expect(c4 == 44, "C4 length 7");
  f.expect(d4 == 23, "D4 length 4");
  f.expect(d3 == 6, "D3 length 3");
  return "C4/7: " + std::to_string(c4) + ", D4/4: " + std::to_string(d4) +
         ", D3/3: " + std::to_string(d3);
}

std::string structural(Findings& f) {
  std::ostringstream s;
  for (int n = 3; n <= 5; ++n) {
    const auto graph = build_graph(GroupType::D, n);
    f.expect(graph.double_edge_count() == 0, "double edge in D" + std::to_string(n));
    s << "D" << n << " doubles " << graph.double_edge_count() << "; ";
  }

  std::size_t steps = 0;
  auto preserve = [&](GroupType type, int n) {
    for (const auto& gamma : enumerate_clans(type, n)) {
      for (int i = 1; i <= n; ++i) {
        const auto step = act_simple(type, i, gamma);
        ++steps;
        f.expect(is_orbit_clan(type, step.output),
                 gamma.to_string() + " s" + std::to_string(i) + " leaves the orbit clans");
        f.expect(type == GroupType::C || is_skew_symmetric(step.output), "skew-symmetry lost");
      }
    }
  };
  for (int n = 1; n <= 4; ++n) preserve(GroupType::C, n);
  for (int n = 2; n <= 4; ++n) preserve(GroupType::D, n);
  s << steps << " action steps; ";

  std::size_t pairs = 0, clans = 0, uninvertible = 0;
  for (auto type : {GroupType::C, GroupType::D}) {
    for (int n = 2; n <= 4; ++n) {
      std::set<Clan> images;
      std::size_t qualifying = 0;
      for (const auto& p : enumerate_shuffle_pairs(type, n)) {
        if (!richardson_nonempty(p.u, p.v)) continue;
        ++qualifying;
        const auto gamma = pair_to_clan(p);
        images.insert(gamma);
        if (const auto back = pair_of_clan(type, gamma)) {
          ++pairs;
          f.expect(back->u == p.u && back->v == p.v,
                   "pair " + p.u.to_string() + " | " + p.v.to_string() + " does not return");
        } else {
          ++uninvertible;
          f.expect(type == GroupType::D && !avoids_pattern(gamma, crossing_pattern()),
                   "no inverse for " + gamma.to_string());
        }
      }
      f.expect(images.size() == qualifying, "pair_to_clan not injective");
      for (const auto& gamma : enumerate_clans(type, n)) {
        if (const auto p = pair_of_clan(type, gamma)) {
          ++clans;
          f.expect(pair_to_clan(*p) == gamma, "clan " + gamma.to_string() + " does not return");
        }
      }
    }
  }
  s << "round trips: " << pairs << " pairs, " << clans << " clans, " << uninvertible
    << " crossed type D clans without an inverse";
  return s.str();
}

std::string bgg_self_checks(Findings& f) {
  std::ostringstream s;
  for (auto [type, rank] : {std::pair{GroupType::C, 2}, std::pair{GroupType::C, 3},
                            std::pair{GroupType::D, 3}}) {
    const auto sys = make_root_system(type, rank);
    const auto result = apply_word(sys, reduced_word(long_element(type, rank)),
                                   positive_root_product(sys));
    const bool ok = result == Polynomial::constant(rank, mpq_class(sys.weyl_order));
    f.expect(ok, "d_w0 of the root product in " + to_string(GroupSpec{type, rank}));
    s << to_string(GroupSpec{type, rank}) << " " << result.to_string() << "; ";
  }

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coefficient(-20, 20);
  std::uniform_int_distribution<int> exponent(0, 4);
  const auto sys = make_root_system(GroupType::C, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p(3);
    for (int t = 0; t < 5; ++t) {
      Monomial m{};
      for (int i = 0; i < 3; ++i) m[i] = static_cast<std::uint8_t>(exponent(rng));
      p.add_term(m, mpq_class(coefficient(rng)));
    }
    const auto& alpha = sys.positive_roots[trial % sys.positive_roots.size()];
    f.expect(divided_difference(sys, alpha, divided_difference(sys, alpha, p)).is_zero(),
             "d^2 != 0 on " + p.to_string());
  }
  s << "d^2 = 0 on 100 polynomials; ";

  std::size_t braid = 0;
  for (auto [type, rank] : {std::pair{GroupType::C, 2}, std::pair{GroupType::C, 3},
                            std::pair{GroupType::D, 2}, std::pair{GroupType::D, 3}}) {
    const auto system = make_root_system(type, rank);
    const auto top = positive_root_product(system);
    for (const auto& w : all_elements(type, rank)) {
      const auto words = all_reduced_words(w);
      const auto first = apply_word(system, words.front(), top);
      for (const auto& word : words) {
        ++braid;
        f.expect(apply_word(system, word, top) == first,
                 "braid relation fails for " + w.to_string());
      }
    }
  }
  s << braid << " reduced words agree";
  return s.str();
}

}  // namespace

int main() {
  criterion(1, "Table 1 reproduction", [](Findings& f) {
    return reproduce(f, "table1", 44,
                     {{"3,2,1,4,3,2,1", 2}, {"2,1,3,4,3,2,1", 2}, {"1,2,3,4,3,2,1", 2},
                      {"4,3,2,1,4,3,2", 1}},
                     5.0);
  });
  criterion(2, "Table 2 reproduction", [](Findings& f) {
    return reproduce(f, "table2", 23, {{"2,4,2,1", 1}}, 5.0);
  });
  criterion(3, "Table 3 reproduction", [](Findings& f) {
    return reproduce(f, "table3", 6, {{"2,3,1", 1}, {"3,1,2", 1}}, 1.0);
  });
  criterion(4, "Oracle equivalence", oracle_equivalence);
  criterion(5, "Word independence", word_independence);
  criterion(6, "Element counts", element_counts);
  criterion(7, "Structural properties", structural);
  criterion(8, "BGG self-checks", bgg_self_checks);
  return failed_criteria == 0 ? 0 : 1;
}
