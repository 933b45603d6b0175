#include "schubert/bgg.hpp"

#include <algorithm>
#include <mutex>
#include <nlohmann/json.hpp>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

Root unit_combination(int rank, int a, int ca, int b = -1, int cb = 0) {
  Root r(rank, 0);
  r[a] = ca;
  if (b >= 0) r[b] = cb;
  return r;
}

bool is_root(const RootSystem& system, const Root& alpha) {
  if (static_cast<int>(alpha.size()) != system.rank) return false;
  Root negated(alpha.size());
  std::transform(alpha.begin(), alpha.end(), negated.begin(), [](int c) { return -c; });
  return std::find(system.positive_roots.begin(), system.positive_roots.end(), alpha) !=
             system.positive_roots.end() ||
         std::find(system.positive_roots.begin(), system.positive_roots.end(), negated) !=
             system.positive_roots.end();
}

// Signed images of the coordinate functions under the reflection in alpha:
// x_i -> x_i - 2 (e_i . alpha) / (alpha . alpha) alpha, always +-x_j here.
std::vector<int> reflection_images(const Root& alpha) {
  int norm = 0;
  for (int c : alpha) norm += c * c;
  const int n = static_cast<int>(alpha.size());
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> image(n, 0);
    image[i] = norm;
    for (int j = 0; j < n; ++j) image[j] -= 2 * alpha[i] * alpha[j];
    int found = 0;
    for (int j = 0; j < n; ++j) {
      if (image[j] == 0) continue;
      if (found != 0 || std::abs(image[j]) != norm) {
        throw InvariantViolation("reflection is not a signed permutation of the variables");
      }
      found = image[j] > 0 ? j + 1 : -(j + 1);
    }
    images[i] = found;
  }
  return images;
}

}  // namespace

RootSystem make_root_system(GroupType type, int rank) {
  if (rank < (type == GroupType::C ? 1 : 2) || rank > kMaxVariables) {
    throw ArgumentError("unsupported rank " + std::to_string(rank) + " for a root system");
  }
  RootSystem system{type, rank, {}, {}, group_order(type, rank)};
  for (int i = 0; i + 1 < rank; ++i) {
    system.simple_roots.push_back(unit_combination(rank, i, 1, i + 1, -1));
  }
  if (type == GroupType::C) {
    system.simple_roots.push_back(unit_combination(rank, rank - 1, 2));
  } else {
    system.simple_roots.push_back(unit_combination(rank, rank - 2, 1, rank - 1, 1));
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      system.positive_roots.push_back(unit_combination(rank, i, 1, j, -1));
      system.positive_roots.push_back(unit_combination(rank, i, 1, j, 1));
    }
    if (type == GroupType::C) system.positive_roots.push_back(unit_combination(rank, i, 2));
  }
  return system;
}

Polynomial reflect(const RootSystem& system, const Root& alpha, const Polynomial& f) {
  if (!is_root(system, alpha)) throw ArgumentError("not a root of the system");
  return f.substitute(reflection_images(alpha));
}

Polynomial divided_difference(const RootSystem& system, const Root& alpha,
                              const Polynomial& f) {
  return (f - reflect(system, alpha, f)).divide_linear(alpha);
}

Polynomial divided_difference(const RootSystem& system, int index, const Polynomial& f) {
  if (index < 1 || index > system.rank) throw ArgumentError("simple root index out of range");
  return divided_difference(system, system.simple_roots[index - 1], f);
}

Polynomial apply_word(const RootSystem& system, std::span<const int> word, Polynomial f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    f = divided_difference(system, *it, f);
  }
  return f;
}

Polynomial positive_root_product(const RootSystem& system) {
  auto product = Polynomial::constant(system.rank, 1);
  for (const auto& alpha : system.positive_roots) product = product * Polynomial::linear(alpha);
  return product;
}

BggOracle::BggOracle(GroupType type, int rank)
    : system_(make_root_system(type, rank)), w0_(long_element(type, rank)) {
  if (rank > kMaxRank) {
    throw ArgumentError("the divided-difference oracle is limited to rank " +
                        std::to_string(kMaxRank));
  }
}

void BggOracle::check_element(const SignedPermutation& w) const {
  if (w.type() != system_.type || w.rank() != system_.rank) {
    throw ArgumentError("element " + w.to_string() + " is not in the oracle's group");
  }
}

const Polynomial& BggOracle::representative(const SignedPermutation& w) const {
  check_element(w);
  {
    std::shared_lock lock(mutex_);
    const auto it = memo_.find(w);
    if (it != memo_.end()) return *it->second;
  }
  Polynomial value(system_.rank);
  if (w == w0_) {
    value = positive_root_product(system_) *
            mpq_class(1, static_cast<unsigned long>(system_.weyl_order));
  } else {
    const int len = length(w);
    int ascent = 0;
    for (int i = 1; i <= system_.rank && ascent == 0; ++i) {
      if (length(apply_simple_right(w, i)) > len) ascent = i;
    }
    value = divided_difference(system_, ascent,
                               representative(apply_simple_right(w, ascent)));
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(w, nullptr);
  if (inserted) it->second = std::make_unique<const Polynomial>(std::move(value));
  return *it->second;
}

Polynomial BggOracle::representative_via_word(std::span<const int> word) const {
  return apply_word(system_, word, representative(w0_));
}

mpq_class BggOracle::oracle_constant(const SignedPermutation& u, const SignedPermutation& v,
                                     const SignedPermutation& w) const {
  check_element(u);
  check_element(v);
  check_element(w);
  if (length(w) != length(u) + length(v)) {
    throw ArgumentError("oracle_constant needs l(w) = l(u) + l(v)");
  }
  const auto result =
      apply_word(system_, reduced_word(w), representative(u) * representative(v));
  if (!result.is_constant()) {
    throw InvariantViolation("d_w(B_u B_v) is not constant: " + result.to_string());
  }
  const auto c = result.constant_term();
  if (c < 0 || c.get_den() != 1) {
    throw InvariantViolation("structure constant is not a nonnegative integer: " + c.get_str());
  }
  return c;
}

void BggOracle::precompute_all() const {
  for (const auto& w : all_elements(system_.type, system_.rank)) representative(w);
}

std::size_t BggOracle::cached_count() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::string BggOracle::export_representatives() const {
  std::vector<std::pair<SignedPermutation, const Polynomial*>> entries;
  {
    std::shared_lock lock(mutex_);
    for (const auto& [w, p] : memo_) entries.emplace_back(w, p.get());
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::ordered_json doc;
  doc["type"] = std::string(1, to_char(system_.type));
  doc["rank"] = system_.rank;
  auto& reps = doc["representatives"] = nlohmann::ordered_json::array();
  for (const auto& [w, p] : entries) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p->terms()) {
      nlohmann::ordered_json term = nlohmann::ordered_json::array();
      for (int j = 0; j < system_.rank; ++j) term.push_back(m[j]);
      term.push_back(c.get_str());
      terms.push_back(std::move(term));
    }
    reps.push_back({{"w", w.to_string()}, {"terms", std::move(terms)}});
  }
  return doc.dump() + "\n";
}

void BggOracle::import_representatives(std::string_view text) const {
  std::vector<std::pair<SignedPermutation, Polynomial>> loaded;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.at("type").get<std::string>() != std::string(1, to_char(system_.type)) ||
        doc.at("rank").get<int>() != system_.rank) {
      throw ParseError("representative snapshot belongs to a different group");
    }
    for (const auto& entry : doc.at("representatives")) {
      auto w = SignedPermutation::parse(system_.type, entry.at("w").get<std::string>());
      Polynomial p(system_.rank);
      for (const auto& term : entry.at("terms")) {
        if (term.size() != static_cast<std::size_t>(system_.rank) + 1) {
          throw ParseError("representative term has the wrong arity");
        }
        Monomial m{};
        for (int j = 0; j < system_.rank; ++j) m[j] = term.at(j).get<std::uint8_t>();
        mpq_class c(term.at(system_.rank).get<std::string>());
        c.canonicalize();
        p.add_term(m, c);
      }
      loaded.emplace_back(std::move(w), std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed representative snapshot: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed coefficient in snapshot: ") + e.what());
  }
  std::unique_lock lock(mutex_);
  for (auto& [w, p] : loaded) {
    memo_.try_emplace(w, std::make_unique<const Polynomial>(std::move(p)));
  }
}

}  // namespace schubert
