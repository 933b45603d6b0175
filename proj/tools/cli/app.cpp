#include "app.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>

#include "cache.hpp"
#include "reference_tables.hpp"
#include "schubert/bgg.hpp"
#include "schubert/clan.hpp"
#include "schubert/errors.hpp"
#include "schubert/monoid_action.hpp"
#include "schubert/richardson.hpp"
#include "schubert/structure_constants.hpp"
#include "schubert/version.hpp"
#include "schubert/weak_order_graph.hpp"
#include "verify.hpp"

namespace schubert::cli {

namespace {

struct GroupArgs {
  std::string type;
  int rank = 0;

  GroupSpec spec() const {
    if (type.size() != 1) throw ParseError("--type must be C or D");
    return parse_group(type + std::to_string(rank));
  }
};

void add_group_options(CLI::App* cmd, GroupArgs& args) {
  cmd->add_option("--type", args.type, "Lie type, C or D")->required();
  cmd->add_option("--rank", args.rank, "Rank n")->required();
}

SignedPermutation parse_element(GroupSpec group, const std::string& text,
                                const char* what) {
  auto w = SignedPermutation::parse(group.type, text);
  if (w.rank() != group.rank) {
    throw ArgumentError(std::string(what) + " = " + text + " has rank " +
                        std::to_string(w.rank()) + ", expected " +
                        std::to_string(group.rank));
  }
  return w;
}

SignedPermutation parse_word_element(GroupSpec group, const std::string& text) {
  const auto word = parse_word(text);
  for (int i : word) {
    if (i < 1 || i > group.rank) {
      throw ParseError("letter " + std::to_string(i) + " of word " + text + " is outside 1.." +
                       std::to_string(group.rank));
    }
  }
  return evaluate_word(group.type, group.rank, word);
}

std::string join_word(const Word& word) { return to_string(std::span<const int>(word)); }

WeakOrderGraph load_graph(GroupSpec group, const std::optional<ResultCache>& cache) {
  if (cache) {
    if (const auto text = cache->load("graph", group)) {
      auto graph = graph_from_json(*text);
      if (graph.type() == group.type && graph.rank() == group.rank) return graph;
    }
  }
  auto graph = build_graph(group.type, group.rank);
  if (cache) cache->store("graph", group, to_json(graph));
  return graph;
}

void print_graph_text(const WeakOrderGraph& graph, std::ostream& out) {
  out << to_string(GroupSpec{graph.type(), graph.rank()}) << ": " << graph.vertices().size()
      << " orbits, " << graph.edges().size() << " edges, " << graph.double_edge_count()
      << " double\n";
  out << "top: " << graph.top().to_string() << "\n";
  for (const auto& v : graph.vertices()) {
    out << "[" << graph.codim(v) << "] " << v.to_string() << "\n";
    for (const auto& e : graph.out_edges(v)) {
      out << "    s" << e.label << (e.is_double ? " (double)" : "") << " -> "
          << e.target.to_string() << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert structure constants in types C and D via orbit clans"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir,
                 std::string("Directory for cached graphs and oracle data (default: $") +
                     kCacheEnv + ")");

  // constant
  GroupArgs constant_group;
  std::string c_u, c_v, c_w, c_w_image;
  auto* constant = app.add_subcommand("constant", "Print the coefficient of S_w in S_u * S_v");
  add_group_options(constant, constant_group);
  constant->add_option("--u", c_u, "Signed one-line images, e.g. -4,1,2,3")->required();
  constant->add_option("--v", c_v, "Signed one-line images")->required();
  auto* w_word = constant->add_option("--w,--w-word", c_w, "w as a word, e.g. 3,2,1,4,3,2,1");
  auto* w_image = constant->add_option("--w-image", c_w_image, "w as signed one-line images");
  w_word->excludes(w_image);
  w_image->excludes(w_word);

  // product
  GroupArgs product_group;
  std::string p_u, p_v, p_format = "text";
  unsigned p_threads = 1;
  auto* product = app.add_subcommand("product", "Expand S_u * S_v");
  add_group_options(product, product_group);
  product->add_option("--u", p_u, "Signed one-line images")->required();
  product->add_option("--v", p_v, "Signed one-line images")->required();
  product->add_option("--format", p_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  product->add_option("--threads", p_threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  // tables
  std::string t_name;
  bool t_verbose = false;
  auto* tables = app.add_subcommand("tables", "Recompute the golden tables and diff them");
  tables->add_option("--table", t_name, "table1, table2 or table3 (default: all)");
  tables->add_flag("--verbose", t_verbose, "Print every row");

  // verify
  GroupArgs verify_group;
  bool v_exhaustive = false;
  std::size_t v_sample = 0;
  std::uint64_t v_seed = 1;
  auto* verify = app.add_subcommand("verify", "Cross-check the rule against the oracle");
  add_group_options(verify, verify_group);
  auto* exhaustive_flag = verify->add_flag("--exhaustive", v_exhaustive, "Check every triple");
  auto* sample_opt = verify->add_option("--sample", v_sample, "Check N sampled triples")
                         ->check(CLI::PositiveNumber);
  verify->add_option("--seed", v_seed, "Seed for --sample");
  exhaustive_flag->excludes(sample_opt);
  sample_opt->excludes(exhaustive_flag);

  // graph
  GroupArgs graph_group;
  std::string g_format = "text";
  auto* graph_cmd = app.add_subcommand("graph", "Weak order graph on orbit clans");
  add_group_options(graph_cmd, graph_group);
  graph_cmd->add_option("--format", g_format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  // brion
  GroupArgs brion_group;
  std::string b_clan;
  auto* brion = app.add_subcommand("brion", "Schubert expansion of an orbit closure class");
  add_group_options(brion, brion_group);
  brion->add_option("--clan", b_clan, "Orbit clan")->required();

  // clan
  auto* clan = app.add_subcommand("clan", "Clan utilities");
  clan->require_subcommand(1);
  std::string k_text;
  auto* normalize_cmd = clan->add_subcommand("normalize", "Canonical form of a clan");
  normalize_cmd->add_option("clan", k_text, "Clan text")->required();
  auto* predicates = clan->add_subcommand("predicates", "Skew-symmetry, type D, (1,2,1,2)");
  predicates->add_option("clan", k_text, "Clan text")->required();
  auto* u_of = clan->add_subcommand("u-of-clan", "Schubert index u(gamma)");
  u_of->add_option("clan", k_text, "Clan text")->required();
  auto* v_of = clan->add_subcommand("v-of-clan", "Opposite Schubert index v(gamma)");
  v_of->add_option("clan", k_text, "Clan text")->required();
  GroupArgs pair_group;
  std::string k_u, k_v;
  auto* of_pair = clan->add_subcommand("of-pair", "Orbit clan of a pair of signed shuffles");
  add_group_options(of_pair, pair_group);
  of_pair->add_option("--u", k_u, "Signed one-line images")->required();
  of_pair->add_option("--v", k_v, "Signed one-line images")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  try {
    const auto cache = ResultCache::resolve(cache_dir);

    if (constant->parsed()) {
      const auto group = constant_group.spec();
      const auto u = parse_element(group, c_u, "u");
      const auto v = parse_element(group, c_v, "v");
      if (c_w.empty() && c_w_image.empty()) throw ArgumentError("give --w or --w-image");
      const auto w = c_w.empty() ? parse_element(group, c_w_image, "w")
                                 : parse_word_element(group, c_w);
      out << schubert_constant(u, v, w) << "\n";
      return kOk;
    }

    if (product->parsed()) {
      const auto group = product_group.spec();
      const auto u = parse_element(group, p_u, "u");
      const auto v = parse_element(group, p_v, "v");
      const auto result = schubert_product(u, v, p_threads);
      if (p_format == "json") {
        out << to_json(result);
      } else if (result.terms.empty()) {
        out << "0\n";
      } else {
        for (const auto& [w, coeff] : result.terms) {
          out << coeff << "  " << w.to_string() << "  " << join_word(reduced_word(w)) << "\n";
        }
      }
      return kOk;
    }

    if (tables->parsed()) {
      bool all_ok = true;
      bool matched = false;
      for (const auto& table : reference_tables()) {
        if (!t_name.empty() && t_name != table.name &&
            "table" + t_name != std::string(table.name)) {
          continue;
        }
        matched = true;
        const auto check = check_table(table);
        out << check.name << "  " << to_string(GroupSpec{table.type, table.rank}) << "  u="
            << table.u << "  v=" << table.v << ": " << check.rows << " rows, " << check.nonzero
            << " nonzero, " << check.mismatches.size() << " mismatches  (" << std::fixed
            << std::setprecision(3) << check.seconds << " s)\n";
        if (t_verbose) {
          for (const auto& row : table.rows) {
            out << "  [" << row.word << "]  (" << Clan::parse(row.clan).to_string() << ")  "
                << row.coefficient << "\n";
          }
        }
        for (const auto& p : check.problems) err << "  " << check.name << ": " << p << "\n";
        for (const auto& m : check.mismatches) {
          err << "  " << check.name << ": [" << m.word << "] expected (" << m.expected_clan
              << ") " << m.expected_coefficient << ", got (" << m.actual_clan << ") "
              << m.actual_coefficient << "\n";
        }
        all_ok = all_ok && check.ok();
      }
      if (!matched) throw ArgumentError("unknown table '" + t_name + "'");
      return all_ok ? kOk : kFailure;
    }

    if (verify->parsed()) {
      const auto group = verify_group.spec();
      if (group.rank > 4) throw ArgumentError("verify supports rank at most 4");
      BggOracle oracle(group.type, group.rank);
      if (cache) {
        if (const auto text = cache->load("bgg", group)) oracle.import_representatives(*text);
      }
      const std::size_t before = oracle.cached_count();
      VerifyOptions options;
      options.sample = v_exhaustive ? 0 : v_sample;
      options.seed = v_seed;
      const auto report = verify_against_oracle(group.type, group.rank, options, oracle);
      if (cache && oracle.cached_count() != before) {
        cache->store("bgg", group, oracle.export_representatives());
      }
      out << to_string(group) << ": " << report.pairs << " pairs, " << report.qualifying_pairs
          << " with w0u >= v, " << report.triples << " triples checked, " << report.nonzero
          << " nonzero, " << report.mismatches.size() << " mismatches  (" << std::fixed
          << std::setprecision(3) << report.seconds << " s)\n";
      for (const auto& m : report.mismatches) {
        err << "  u=" << m.u << " v=" << m.v << " w=" << m.w << ": rule " << m.rule
            << ", oracle " << m.oracle << "\n";
      }
      return report.ok() ? kOk : kFailure;
    }

    if (graph_cmd->parsed()) {
      const auto group = graph_group.spec();
      const auto graph = load_graph(group, cache);
      if (g_format == "dot") {
        out << export_dot(graph);
      } else if (g_format == "json") {
        out << to_json(graph);
      } else {
        print_graph_text(graph, out);
      }
      return kOk;
    }

    if (brion->parsed()) {
      const auto group = brion_group.spec();
      const auto gamma = Clan::parse(b_clan);
      const auto graph = load_graph(group, cache);
      if (!graph.contains(gamma)) {
        throw ArgumentError("clan " + gamma.to_string() + " is not an orbit clan of " +
                            to_string(group));
      }
      const auto decomposition = brion_decomposition(graph, gamma);
      for (const auto& [w, coeff] : decomposition.terms) {
        out << coeff << "  " << w.to_string() << "  " << join_word(reduced_word(w)) << "\n";
      }
      return kOk;
    }

    if (normalize_cmd->parsed()) {
      out << Clan::parse(k_text).to_string() << "\n";
      return kOk;
    }
    if (predicates->parsed()) {
      const auto gamma = Clan::parse(k_text);
      auto yes_no = [](bool b) { return b ? "yes" : "no"; };
      out << "clan: " << gamma.to_string() << "\n"
          << "skew-symmetric: " << yes_no(is_skew_symmetric(gamma)) << "\n"
          << "type-d: " << yes_no(is_type_d_clan(gamma)) << "\n"
          << "avoids-1212: " << yes_no(avoids_pattern(gamma, crossing_pattern())) << "\n";
      return kOk;
    }
    if (u_of->parsed()) {
      out << u_of_clan(Clan::parse(k_text)).to_string() << "\n";
      return kOk;
    }
    if (v_of->parsed()) {
      out << v_of_clan(Clan::parse(k_text)).to_string() << "\n";
      return kOk;
    }
    if (of_pair->parsed()) {
      const auto group = pair_group.spec();
      const auto u = parse_element(group, k_u, "u");
      const auto v = parse_element(group, k_v, "v");
      const auto pair = classify_pair(u, v);
      if (!pair) {
        throw UnsupportedPair("(" + u.to_string() + ", " + v.to_string() +
                              ") is not a pair of signed shuffles");
      }
      out << pair_to_clan(*pair).to_string() << "\n";
      return kOk;
    }
  } catch (const UnsupportedPair& e) {
    err << "unsupported pair: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace schubert::cli
