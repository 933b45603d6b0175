#include "schubert/clan.hpp"

#include <algorithm>
#include <map>

#include "schubert/errors.hpp"
#include "text.hpp"

namespace schubert {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

Symbol parse_symbol(std::string_view token) {
  if (token == "+") return Symbol::plus();
  if (token == "-" || token == kUnicodeMinus) return Symbol::minus();
  const int label = detail::parse_int(token, "clan");
  if (label <= 0) throw ParseError("clan labels must be positive: '" + std::string(token) + "'");
  return Symbol::arc(label);
}

}  // namespace

Clan Clan::parse(std::string_view text) {
  const auto body = detail::strip_brackets(text);
  std::vector<Symbol> raw;
  if (body.find_first_of(", \t") == std::string_view::npos) {
    for (std::size_t i = 0; i < body.size();) {
      if (body.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
        raw.push_back(Symbol::minus());
        i += kUnicodeMinus.size();
      } else {
        raw.push_back(parse_symbol(body.substr(i, 1)));
        ++i;
      }
    }
  } else {
    for (auto token : detail::split_fields(body)) raw.push_back(parse_symbol(token));
  }
  try {
    return normalize(raw);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

int Clan::plus_count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), kPlus));
}

int Clan::minus_count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), kMinus));
}

int Clan::arc_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](int c) { return c >= 0; })) /
         2;
}

std::vector<Symbol> Clan::symbols() const {
  std::vector<Symbol> out(cells_.size());
  int next = 1;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] == kPlus) {
      out[i] = Symbol::plus();
    } else if (cells_[i] == kMinus) {
      out[i] = Symbol::minus();
    } else if (mate(i) > i) {
      out[i] = Symbol::arc(next);
      out[mate(i)] = Symbol::arc(next);
      ++next;
    }
  }
  return out;
}

std::string Clan::to_string() const {
  std::string out;
  const auto syms = symbols();
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (i != 0) out += ',';
    switch (syms[i].kind) {
      case Symbol::Kind::Plus:
        out += '+';
        break;
      case Symbol::Kind::Minus:
        out += '-';
        break;
      case Symbol::Kind::Arc:
        out += std::to_string(syms[i].label);
        break;
    }
  }
  return out;
}

Clan Clan::swapped(std::size_t a, std::size_t b) const {
  auto relabel = [a, b](int c) {
    if (c == static_cast<int>(a)) return static_cast<int>(b);
    if (c == static_cast<int>(b)) return static_cast<int>(a);
    return c;
  };
  std::vector<int> out(cells_.size());
  for (std::size_t x = 0; x < cells_.size(); ++x) {
    const std::size_t from = x == a ? b : (x == b ? a : x);
    out[x] = relabel(cells_[from]);
  }
  return Clan(std::move(out));
}

Clan Clan::joined(std::size_t a, std::size_t b) const {
  if (a == b || !is_sign(a) || !is_sign(b)) {
    throw ArgumentError("only two distinct sign positions can be joined by an arc");
  }
  auto out = cells_;
  out[a] = static_cast<int>(b);
  out[b] = static_cast<int>(a);
  return Clan(std::move(out));
}

Clan normalize(std::span<const Symbol> raw, std::optional<std::pair<int, int>> pq) {
  std::vector<int> cells(raw.size(), Clan::kPlus);
  std::map<int, std::vector<std::size_t>> positions;
  int plus = 0;
  int minus = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    switch (raw[i].kind) {
      case Symbol::Kind::Plus:
        cells[i] = Clan::kPlus;
        ++plus;
        break;
      case Symbol::Kind::Minus:
        cells[i] = Clan::kMinus;
        ++minus;
        break;
      case Symbol::Kind::Arc:
        positions[raw[i].label].push_back(i);
        break;
    }
  }
  for (const auto& [label, where] : positions) {
    if (where.size() != 2) {
      throw ArgumentError("clan label " + std::to_string(label) + " occurs " +
                          std::to_string(where.size()) + " times instead of twice");
    }
    cells[where[0]] = static_cast<int>(where[1]);
    cells[where[1]] = static_cast<int>(where[0]);
  }
  if (pq) {
    const auto [p, q] = *pq;
    if (static_cast<int>(raw.size()) != p + q || plus - minus != p - q) {
      throw ArgumentError("symbol counts do not form a (" + std::to_string(p) + "," +
                          std::to_string(q) + ")-clan");
    }
  }
  return Clan(std::move(cells));
}

bool avoids_pattern(const Clan& gamma, const Clan& pattern) {
  const std::size_t k = pattern.size();
  if (k == 0) return false;
  if (k > gamma.size()) return true;
  std::vector<std::size_t> chosen(k);
  // Places pattern symbol t at some position after chosen[t-1]. A second
  // arc endpoint is forced to the mate of the first one.
  auto place = [&](auto&& self, std::size_t t, std::size_t from) -> bool {
    if (t == k) return true;
    if (pattern.is_arc(t) && pattern.mate(t) < t) {
      const std::size_t pos = gamma.mate(chosen[pattern.mate(t)]);
      if (pos < from) return false;
      chosen[t] = pos;
      return self(self, t + 1, pos + 1);
    }
    for (std::size_t pos = from; pos + (k - t) <= gamma.size(); ++pos) {
      bool fits = false;
      if (pattern.is_plus(t)) fits = gamma.is_plus(pos);
      else if (pattern.is_minus(t)) fits = gamma.is_minus(pos);
      else fits = gamma.is_arc(pos) && gamma.mate(pos) > pos;
      if (!fits) continue;
      chosen[t] = pos;
      if (self(self, t + 1, pos + 1)) return true;
    }
    return false;
  };
  return !place(place, 0, 0);
}

const Clan& crossing_pattern() {
  static const Clan pattern = Clan::parse("1,2,1,2");
  return pattern;
}

bool is_skew_symmetric(const Clan& gamma) {
  const std::size_t size = gamma.size();
  if (size % 2 != 0) return false;
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t mirror = size - 1 - i;
    if (gamma.is_plus(i) && !gamma.is_minus(mirror)) return false;
    if (gamma.is_minus(i) && !gamma.is_plus(mirror)) return false;
    if (gamma.is_arc(i)) {
      if (!gamma.is_arc(mirror)) return false;
      if (gamma.mate(mirror) != size - 1 - gamma.mate(i)) return false;
    }
  }
  return true;
}

bool is_type_d_clan(const Clan& gamma) {
  if (!is_skew_symmetric(gamma)) return false;
  const std::size_t size = gamma.size();
  const std::size_t n = size / 2;
  int count = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (gamma.is_arc(i) && gamma.mate(i) == size - 1 - i) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gamma.is_minus(i)) ++count;
    if (gamma.is_arc(i) && gamma.mate(i) > i && gamma.mate(i) < n) ++count;
  }
  return count % 2 == 0;
}

bool is_orbit_clan(GroupType type, const Clan& gamma) {
  return type == GroupType::C ? is_skew_symmetric(gamma) : is_type_d_clan(gamma);
}

Clan dense_orbit_clan(GroupType type, int rank) {
  if (rank < (type == GroupType::C ? 1 : 2)) {
    throw ArgumentError("rank too small for a dense orbit clan");
  }
  std::vector<Symbol> raw;
  if (type == GroupType::C) {
    for (int k = 1; k <= rank; ++k) raw.push_back(Symbol::arc(k));
    for (int k = rank; k >= 1; --k) raw.push_back(Symbol::arc(k));
  } else if (rank % 2 == 0) {
    for (int k = 1; k <= rank; ++k) raw.push_back(Symbol::arc(k));
    for (int k = rank - 1; k >= 1; k -= 2) {
      raw.push_back(Symbol::arc(k));
      raw.push_back(Symbol::arc(k + 1));
    }
  } else {
    for (int k = 1; k < rank; ++k) raw.push_back(Symbol::arc(k));
    raw.push_back(Symbol::plus());
    raw.push_back(Symbol::minus());
    for (int k = rank - 2; k >= 1; k -= 2) {
      raw.push_back(Symbol::arc(k));
      raw.push_back(Symbol::arc(k + 1));
    }
  }
  return normalize(raw);
}

std::vector<Clan> enumerate_clans(GroupType type, int rank) {
  if (rank < 1) throw ArgumentError("rank must be positive");
  const std::size_t n = static_cast<std::size_t>(rank);
  const std::size_t size = 2 * n;
  // A skew-symmetric clan is determined by its first half. Each first-half
  // position is a sign, the end of an arc to its own mirror, part of an arc
  // inside the first half, or part of a pair {i, k} with arcs i -> mirror(k)
  // and k -> mirror(i).
  std::vector<Symbol> raw(size, Symbol::plus());
  std::vector<char> used(n, 0);
  std::vector<Clan> out;
  int next_label = 1;
  auto set_arc = [&](std::size_t a, std::size_t b) {
    raw[a] = Symbol::arc(next_label);
    raw[b] = Symbol::arc(next_label);
    ++next_label;
  };
  auto recurse = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      auto gamma = normalize(raw);
      if (is_orbit_clan(type, gamma)) out.push_back(std::move(gamma));
      return;
    }
    const std::size_t mi = size - 1 - i;
    used[i] = 1;
    raw[i] = Symbol::plus();
    raw[mi] = Symbol::minus();
    self(self);
    raw[i] = Symbol::minus();
    raw[mi] = Symbol::plus();
    self(self);
    const int saved = next_label;
    set_arc(i, mi);
    self(self);
    next_label = saved;
    for (std::size_t k = i + 1; k < n; ++k) {
      if (used[k]) continue;
      const std::size_t mk = size - 1 - k;
      used[k] = 1;
      set_arc(i, k);
      set_arc(mk, mi);
      self(self);
      next_label = saved;
      set_arc(i, mk);
      set_arc(k, mi);
      self(self);
      next_label = saved;
      used[k] = 0;
    }
    used[i] = 0;
  };
  recurse(recurse);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schubert

std::size_t std::hash<schubert::Clan>::operator()(const schubert::Clan& c) const noexcept {
  std::size_t h = c.cells_.size();
  for (int x : c.cells_) h = h * 1000003u + static_cast<std::size_t>(x + 3);
  return h;
}
