#include "schubert/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "schubert/errors.hpp"
#include "text.hpp"

namespace schubert {

namespace {

constexpr int kMaxEnumerationRank = 7;

int min_rank(GroupType type) { return type == GroupType::C ? 1 : 2; }

void check_rank(GroupType type, int rank) {
  if (rank < min_rank(type)) {
    throw ArgumentError("rank " + std::to_string(rank) +
                        " is too small for type " + to_char(type));
  }
}

void check_index(int rank, int index) {
  if (index < 1 || index > rank) {
    throw ArgumentError("simple reflection index " + std::to_string(index) +
                        " outside 1.." + std::to_string(rank));
  }
}

void check_compatible(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.type() != b.type()) throw ArgumentError("group type mismatch");
  if (a.rank() != b.rank()) throw ArgumentError("rank mismatch");
}

int sign_of(int x) { return x < 0 ? -1 : 1; }

struct GroupTable {
  std::vector<SignedPermutation> all;
  std::vector<std::vector<SignedPermutation>> levels;
};

// Breadth-first closure from the identity under right multiplication by the
// simple reflections. Each new element sits exactly one level above the
// element it was reached from.
std::unique_ptr<GroupTable> build_table(GroupType type, int rank) {
  auto table = std::make_unique<GroupTable>();
  std::unordered_set<SignedPermutation> seen;
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(type, rank)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= rank; ++i) {
        auto ws = apply_simple_right(w, i);
        if (seen.insert(ws).second) next.push_back(std::move(ws));
      }
    }
    std::sort(frontier.begin(), frontier.end());
    table->levels.push_back(std::move(frontier));
    frontier = std::move(next);
  }
  table->all.assign(seen.begin(), seen.end());
  std::sort(table->all.begin(), table->all.end());
  if (table->all.size() != group_order(type, rank)) {
    throw InvariantViolation("group enumeration produced the wrong order");
  }
  return table;
}

const GroupTable& group_table(GroupType type, int rank) {
  check_rank(type, rank);
  if (rank > kMaxEnumerationRank) {
    throw ArgumentError("enumeration is limited to rank " +
                        std::to_string(kMaxEnumerationRank));
  }
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::unique_ptr<GroupTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{to_char(type), rank}];
  if (!slot) slot = build_table(type, rank);
  return *slot;
}

std::vector<int> sorted_prefix(std::span<const int> images, int d) {
  std::vector<int> out(images.begin(), images.begin() + d);
  std::sort(out.begin(), out.end());
  return out;
}

// Condition (2) of the type D criterion: on every window of the sorted
// prefixes whose folded values are {n+1-r,...,n} on both sides, the number of
// entries above n must agree in parity.
bool type_d_parity_ok(const Permutation& a, const Permutation& b, int n) {
  const int m = 2 * n;
  auto fold = [m](int x) { return std::min(x, m + 1 - x); };
  for (int d = 1; d <= n; ++d) {
    const auto c = sorted_prefix(a.images(), d);
    const auto e = sorted_prefix(b.images(), d);
    for (int start = 0; start < d; ++start) {
      for (int r = 1; start + r <= d; ++r) {
        auto top_block = [&](const std::vector<int>& seq) {
          std::vector<int> folded;
          for (int j = start; j < start + r; ++j) folded.push_back(fold(seq[j]));
          std::sort(folded.begin(), folded.end());
          for (int j = 0; j < r; ++j) {
            if (folded[j] != n + 1 - r + j) return false;
          }
          return true;
        };
        if (!top_block(c) || !top_block(e)) continue;
        auto high = [&](const std::vector<int>& seq) {
          return std::count_if(seq.begin() + start, seq.begin() + start + r,
                               [n](int x) { return x > n; });
        };
        if ((high(c) - high(e)) % 2 != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

char to_char(GroupType type) { return static_cast<char>(type); }

GroupSpec parse_group(std::string_view text) {
  text = detail::trim(text);
  if (text.size() < 2) throw ParseError("invalid group '" + std::string(text) + "'");
  GroupType type;
  switch (text.front()) {
    case 'C':
    case 'c':
      type = GroupType::C;
      break;
    case 'D':
    case 'd':
      type = GroupType::D;
      break;
    default:
      throw ParseError("unknown group type in '" + std::string(text) + "'");
  }
  const int rank = detail::parse_int(text.substr(1), "rank");
  check_rank(type, rank);
  return {type, rank};
}

std::string to_string(GroupSpec spec) {
  return std::string(1, to_char(spec.type)) + std::to_string(spec.rank);
}

Word parse_word(std::string_view text) { return detail::parse_int_list(text, "word"); }

std::string to_string(std::span<const int> word) {
  return "[" + detail::join_ints(word) + "]";
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size() + 1, 0);
  for (int x : images_) {
    if (x < 1 || x > size() || hit[x]) {
      throw ArgumentError("not a permutation: " + detail::join_ints(images_));
    }
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::reversal(int size) {
  std::vector<int> images(size);
  for (int i = 0; i < size; ++i) images[i] = size - i;
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  const auto body = detail::strip_brackets(text);
  std::vector<int> images;
  // Compact form "51236784" for permutations of at most 9 letters.
  if (body.size() > 1 && std::all_of(body.begin(), body.end(),
                                     [](char ch) { return ch >= '1' && ch <= '9'; })) {
    for (char ch : body) images.push_back(ch - '0');
  } else {
    images = detail::parse_int_list(body, "permutation");
  }
  try {
    return Permutation(std::move(images));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const { return detail::join_ints(images_); }

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw ArgumentError("permutation size mismatch");
  std::vector<int> out(rhs.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs(rhs.images_[i]);
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------
// SignedPermutation

SignedPermutation::SignedPermutation(GroupType type, std::vector<int> images)
    : type_(type), images_(std::move(images)) {
  check_rank(type_, rank());
  std::vector<char> hit(images_.size() + 1, 0);
  for (int x : images_) {
    const int a = std::abs(x);
    if (a < 1 || a > rank() || hit[a]) {
      throw ArgumentError("not a signed permutation: " + detail::join_ints(images_));
    }
    hit[a] = 1;
  }
  if (type_ == GroupType::D && negative_count() % 2 != 0) {
    throw ArgumentError("type D element needs an even number of negative entries: " +
                        detail::join_ints(images_));
  }
}

SignedPermutation SignedPermutation::identity(GroupType type, int rank) {
  check_rank(type, rank);
  std::vector<int> images(rank);
  std::iota(images.begin(), images.end(), 1);
  return SignedPermutation(type, std::move(images));
}

SignedPermutation SignedPermutation::simple_reflection(GroupType type, int rank,
                                                       int index) {
  check_rank(type, rank);
  check_index(rank, index);
  std::vector<int> images(rank);
  std::iota(images.begin(), images.end(), 1);
  if (index < rank) {
    std::swap(images[index - 1], images[index]);
  } else if (type == GroupType::C) {
    images[rank - 1] = -rank;
  } else {
    images[rank - 2] = -rank;
    images[rank - 1] = -(rank - 1);
  }
  return SignedPermutation(type, std::move(images));
}

SignedPermutation SignedPermutation::parse(GroupType type, std::string_view text) {
  try {
    return SignedPermutation(type, detail::parse_int_list(text, "signed permutation"));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

int SignedPermutation::operator()(int position) const {
  const int value = images_[std::abs(position) - 1];
  return position < 0 ? -value : value;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < rank(); ++i) {
    inv[std::abs(images_[i]) - 1] = sign_of(images_[i]) * (i + 1);
  }
  return SignedPermutation(type_, std::move(inv));
}

std::string SignedPermutation::to_string() const { return detail::join_ints(images_); }

int SignedPermutation::negative_count() const {
  return static_cast<int>(std::count_if(images_.begin(), images_.end(),
                                        [](int x) { return x < 0; }));
}

SignedPermutation operator*(const SignedPermutation& lhs, const SignedPermutation& rhs) {
  check_compatible(lhs, rhs);
  std::vector<int> out(rhs.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs(rhs.images_[i]);
  return SignedPermutation(lhs.type_, std::move(out));
}

// ---------------------------------------------------------------------------
// Group-level functions

std::size_t group_order(GroupType type, int rank) {
  check_rank(type, rank);
  std::size_t order = 1;
  for (int i = 2; i <= rank; ++i) order *= static_cast<std::size_t>(i);
  order <<= (type == GroupType::C ? rank : rank - 1);
  return order;
}

int max_length(GroupType type, int rank) {
  check_rank(type, rank);
  return type == GroupType::C ? rank * rank : rank * rank - rank;
}

int length(const SignedPermutation& w) {
  // w sends x_i to sign(w(i)) x_{|w(i)|}. A root ±x_a ± x_b is negative
  // exactly when the coefficient on the smaller index is negative.
  const int n = w.rank();
  const auto img = w.images();
  int len = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int a = std::abs(img[i]);
      const int b = std::abs(img[j]);
      const int sa = sign_of(img[i]);
      const int sb = sign_of(img[j]);
      // x_i - x_j, then x_i + x_j.
      for (int sj : {-sb, sb}) {
        const int lead = a < b ? sa : sj;
        if (lead < 0) ++len;
      }
    }
    if (w.type() == GroupType::C && img[i] < 0) ++len;
  }
  return len;
}

Permutation embed(const SignedPermutation& w) {
  const int n = w.rank();
  const int m = 2 * n;
  std::vector<int> out(m);
  for (int i = 0; i < n; ++i) {
    const int x = w.images()[i];
    out[i] = x > 0 ? x : m + 1 + x;
    out[m - 1 - i] = m + 1 - out[i];
  }
  return Permutation(std::move(out));
}

std::optional<SignedPermutation> unembed(const Permutation& p, GroupType type) {
  if (p.size() % 2 != 0 || p.size() == 0) return std::nullopt;
  const int m = p.size();
  const int n = m / 2;
  if (n < min_rank(type)) return std::nullopt;
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) {
    if (p(m + 1 - i) != m + 1 - p(i)) return std::nullopt;
    images[i - 1] = p(i) <= n ? p(i) : -(m + 1 - p(i));
  }
  const auto negatives = std::count_if(images.begin(), images.end(),
                                       [](int x) { return x < 0; });
  if (type == GroupType::D && negatives % 2 != 0) return std::nullopt;
  return SignedPermutation(type, std::move(images));
}

SignedPermutation apply_simple_right(const SignedPermutation& w, int index) {
  return w * SignedPermutation::simple_reflection(w.type(), w.rank(), index);
}

SignedPermutation apply_simple_left(int index, const SignedPermutation& w) {
  return SignedPermutation::simple_reflection(w.type(), w.rank(), index) * w;
}

SignedPermutation long_element(GroupType type, int rank) {
  check_rank(type, rank);
  std::vector<int> images(rank);
  for (int i = 0; i < rank; ++i) images[i] = -(i + 1);
  if (type == GroupType::D && rank % 2 != 0) images[rank - 1] = rank;
  return SignedPermutation(type, std::move(images));
}

const std::vector<SignedPermutation>& all_elements(GroupType type, int rank) {
  return group_table(type, rank).all;
}

const std::vector<SignedPermutation>& enumerate_by_length(GroupType type, int rank,
                                                          int len) {
  static const std::vector<SignedPermutation> empty;
  const auto& levels = group_table(type, rank).levels;
  if (len < 0 || len >= static_cast<int>(levels.size())) return empty;
  return levels[len];
}

Word reduced_word(const SignedPermutation& w) {
  // Peeling the smallest left descent each time yields the lexicographically
  // smallest reduced word.
  Word word;
  auto current = w;
  int len = length(current);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= current.rank(); ++i) {
      auto next = apply_simple_left(i, current);
      if (length(next) < len) {
        word.push_back(i);
        current = std::move(next);
        --len;
        found = true;
        break;
      }
    }
    if (!found) throw InvariantViolation("element of positive length has no descent");
  }
  return word;
}

std::vector<Word> all_reduced_words(const SignedPermutation& w) {
  const int len = length(w);
  if (len == 0) return {Word{}};
  std::vector<Word> out;
  for (int i = 1; i <= w.rank(); ++i) {
    const auto shorter = apply_simple_right(w, i);
    if (length(shorter) >= len) continue;
    for (auto& word : all_reduced_words(shorter)) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignedPermutation evaluate_word(GroupType type, int rank, std::span<const int> word) {
  auto w = SignedPermutation::identity(type, rank);
  for (int i : word) w = apply_simple_right(w, i);
  return w;
}

bool is_reduced(GroupType type, int rank, std::span<const int> word) {
  return length(evaluate_word(type, rank, word)) == static_cast<int>(word.size());
}

bool bruhat_leq(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw ArgumentError("permutation size mismatch");
  for (int d = 1; d < lhs.size(); ++d) {
    const auto a = sorted_prefix(lhs.images(), d);
    const auto b = sorted_prefix(rhs.images(), d);
    for (int j = 0; j < d; ++j) {
      if (a[j] > b[j]) return false;
    }
  }
  return true;
}

bool bruhat_leq(const SignedPermutation& lhs, const SignedPermutation& rhs) {
  check_compatible(lhs, rhs);
  const auto a = embed(lhs);
  const auto b = embed(rhs);
  if (!bruhat_leq(a, b)) return false;
  if (lhs.type() == GroupType::C) return true;
  return type_d_parity_ok(a, b, lhs.rank());
}

}  // namespace schubert

std::size_t std::hash<schubert::SignedPermutation>::operator()(
    const schubert::SignedPermutation& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.type());
  for (int x : w.images()) h = h * 1000003u + static_cast<std::size_t>(x + 64);
  return h;
}
