#include "schubert/structure_constants.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <optional>
#include <thread>

#include "schubert/errors.hpp"
#include "schubert/monoid_action.hpp"

namespace schubert {

namespace {

ShufflePair require_pair(const SignedPermutation& u, const SignedPermutation& v) {
  auto pair = classify_pair(u, v);
  if (!pair) {
    throw UnsupportedPair("(" + u.to_string() + ", " + v.to_string() +
                          ") is not a " + std::string(1, to_char(u.type())) +
                          "-type pair of signed shuffles");
  }
  return *pair;
}

bool is_identity(const SignedPermutation& w) {
  return w == SignedPermutation::identity(w.type(), w.rank());
}

// S_e is the unit class, so a trivial factor needs no orbit data.
std::optional<SignedPermutation> trivial_product(const SignedPermutation& u,
                                                 const SignedPermutation& v) {
  if (is_identity(v)) return u;
  if (is_identity(u)) return v;
  return std::nullopt;
}

std::uint64_t coefficient(GroupType type, int doubles) {
  return type == GroupType::C ? std::uint64_t{1} << doubles : 1;
}

}  // namespace

std::uint64_t schubert_constant(const SignedPermutation& u, const SignedPermutation& v,
                                const SignedPermutation& w) {
  if (w.type() != u.type() || w.rank() != u.rank()) {
    throw ArgumentError("w does not belong to the group of u and v");
  }
  if (u.type() != v.type() || u.rank() != v.rank()) {
    throw ArgumentError("u and v belong to different groups");
  }
  if (const auto single = trivial_product(u, v)) return w == *single ? 1 : 0;
  const auto pair = require_pair(u, v);
  if (length(w) != length(u) + length(v)) return 0;
  if (!richardson_nonempty(u, v)) return 0;
  const auto gamma = pair_to_clan(pair);
  const auto reached = act_word(u.type(), reduced_word(w), gamma);
  if (reached.clan != dense_orbit_clan(u.type(), u.rank())) return 0;
  return coefficient(u.type(), reached.doubles);
}

SchubertProduct schubert_product(const SignedPermutation& u, const SignedPermutation& v,
                                 unsigned threads) {
  if (u.type() != v.type() || u.rank() != v.rank()) {
    throw ArgumentError("u and v belong to different groups");
  }
  SchubertProduct product{u.type(), u.rank(), u, v, {}};
  if (const auto single = trivial_product(u, v)) {
    product.terms.emplace(*single, 1);
    return product;
  }
  const auto pair = require_pair(u, v);
  const int target_length = length(u) + length(v);
  if (target_length > max_length(u.type(), u.rank())) return product;
  if (!richardson_nonempty(u, v)) return product;

  const auto gamma = pair_to_clan(pair);
  const auto top = dense_orbit_clan(u.type(), u.rank());
  const auto& candidates = enumerate_by_length(u.type(), u.rank(), target_length);
  std::vector<std::uint64_t> values(candidates.size(), 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto reached = act_word(u.type(), reduced_word(candidates[k]), gamma);
      if (reached.clan == top) values[k] = coefficient(u.type(), reached.doubles);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, candidates.size()));
  if (threads <= 1) {
    work(0, candidates.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (candidates.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < candidates.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(candidates.size(), begin + chunk));
    }
    for (auto& t : pool) t.join();
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (values[k] != 0) product.terms.emplace(candidates[k], values[k]);
  }
  return product;
}

std::vector<ProductRow> product_rows(const SignedPermutation& u, const SignedPermutation& v) {
  const auto pair = require_pair(u, v);
  const auto gamma = pair_to_clan(pair);
  const auto top = dense_orbit_clan(u.type(), u.rank());
  std::vector<ProductRow> rows;
  for (const auto& w : enumerate_by_length(u.type(), u.rank(), length(u) + length(v))) {
    auto word = reduced_word(w);
    auto reached = act_word(u.type(), word, gamma);
    const auto coeff = reached.clan == top ? coefficient(u.type(), reached.doubles) : 0;
    rows.push_back({w, std::move(word), std::move(reached.clan), reached.doubles, coeff});
  }
  std::sort(rows.begin(), rows.end(),
            [](const ProductRow& a, const ProductRow& b) { return a.word < b.word; });
  return rows;
}

std::string to_json(const SchubertProduct& product) {
  nlohmann::ordered_json doc;
  doc["type"] = std::string(1, to_char(product.type));
  doc["rank"] = product.rank;
  doc["u"] = product.u.to_string();
  doc["v"] = product.v.to_string();
  auto& terms = doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [w, coeff] : product.terms) {
    nlohmann::ordered_json term;
    term["w"] = w.to_string();
    term["word"] = reduced_word(w);
    term["coeff"] = coeff;
    terms.push_back(std::move(term));
  }
  return doc.dump(2) + "\n";
}

}  // namespace schubert
