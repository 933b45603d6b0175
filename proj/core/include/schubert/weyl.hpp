#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

enum class GroupType : char { C = 'C', D = 'D' };

char to_char(GroupType type);

/// A Weyl group together with its rank, written "C4", "D3", ...
struct GroupSpec {
  GroupType type;
  int rank;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec parse_group(std::string_view text);
std::string to_string(GroupSpec spec);

/// Sequence of simple-reflection indices in 1..n. The word [i1,...,ik] denotes
/// the product s_{i1} s_{i2} ... s_{ik}.
using Word = std::vector<int>;

Word parse_word(std::string_view text);
std::string to_string(std::span<const int> word);

/// A bijection of [m], stored in one-line notation (values 1..m).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  /// The longest element m, m-1, ..., 1 of S_m.
  static Permutation reversal(int size);
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  /// Image of a 1-based position.
  int operator()(int position) const { return images_[position - 1]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Element of the type C_n or D_n Weyl group as a signed permutation of
/// {±1,...,±n}. Only the images of the positive positions are stored; the
/// value at -i is implicitly the negative of the value at i.
class SignedPermutation {
 public:
  SignedPermutation(GroupType type, std::vector<int> images);

  static SignedPermutation identity(GroupType type, int rank);
  /// Simple reflection s_i. For i < n it swaps i and i+1; s_n negates n in
  /// type C (root 2x_n) and sends n-1 -> -n, n -> -(n-1) in type D
  /// (root x_{n-1} + x_n).
  static SignedPermutation simple_reflection(GroupType type, int rank, int index);
  /// Comma separated signed images such as "-4,1,2,-3".
  static SignedPermutation parse(GroupType type, std::string_view text);

  GroupType type() const { return type_; }
  int rank() const { return static_cast<int>(images_.size()); }
  std::span<const int> images() const { return images_; }
  /// Value at a signed position in {±1,...,±n}.
  int operator()(int position) const;

  SignedPermutation inverse() const;
  std::string to_string() const;
  int negative_count() const;

  friend SignedPermutation operator*(const SignedPermutation& lhs,
                                     const SignedPermutation& rhs);
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  GroupType type_;
  std::vector<int> images_;
};

std::size_t group_order(GroupType type, int rank);
/// Length of the long element, i.e. the number of positive roots.
int max_length(GroupType type, int rank);

/// Coxeter length in the element's own group.
int length(const SignedPermutation& w);

/// The image of w in S_{2n}: positive values are kept, -k becomes 2n+1-k, and
/// positions n+1..2n are filled by pi(2n+1-i) = 2n+1-pi(i).
Permutation embed(const SignedPermutation& w);
/// Inverse of embed. Empty when the permutation is not a signed element of
/// S_{2n}, or not a type D element when type is D.
std::optional<SignedPermutation> unembed(const Permutation& p, GroupType type);

SignedPermutation apply_simple_right(const SignedPermutation& w, int index);
SignedPermutation apply_simple_left(int index, const SignedPermutation& w);

SignedPermutation long_element(GroupType type, int rank);

/// Every element of the group, sorted by one-line images.
const std::vector<SignedPermutation>& all_elements(GroupType type, int rank);
/// All elements of a given length, sorted by one-line images.
const std::vector<SignedPermutation>& enumerate_by_length(GroupType type,
                                                          int rank, int len);

/// Lexicographically smallest reduced word of w.
Word reduced_word(const SignedPermutation& w);
/// Every reduced word of w, sorted lexicographically.
std::vector<Word> all_reduced_words(const SignedPermutation& w);
SignedPermutation evaluate_word(GroupType type, int rank,
                                std::span<const int> word);
bool is_reduced(GroupType type, int rank, std::span<const int> word);

/// Bruhat order. Type C compares embeddings in S_{2n}; type D additionally
/// applies the parity condition on sorted prefixes.
bool bruhat_leq(const SignedPermutation& lhs, const SignedPermutation& rhs);
/// Tableau criterion in S_m.
bool bruhat_leq(const Permutation& lhs, const Permutation& rhs);

}  // namespace schubert

template <>
struct std::hash<schubert::SignedPermutation> {
  std::size_t operator()(const schubert::SignedPermutation& w) const noexcept;
};
