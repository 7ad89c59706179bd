#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayconn {

/// Largest arity for which Cayley graphs are materialized (8! = 40320).
inline constexpr int kMaxArity = 8;

/// Largest arity whose factorial fits the 64-bit rank.
inline constexpr int kMaxRankArity = 20;

std::uint64_t factorial(int n);

enum class Parity { Even, Odd };

/// A permutation of [n] in one-line notation. Positions and symbols are
/// 1-based at the interface; storage is an ordinary vector of symbols.
class Permutation {
 public:
  /// Throws ArgumentError unless `symbols` is a bijection on 1..size.
  explicit Permutation(std::vector<int> symbols);

  static Permutation identity(int n);

  /// Parses a digit string such as "4231" (n <= 9).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(symbols_.size()); }

  /// Symbol at 1-based `position`.
  int at(int position) const;

  std::span<const int> symbols() const { return symbols_; }

  /// 1-based position holding `symbol`.
  int position_of(int symbol) const;

  /// Digit string for n <= 9, otherwise symbols separated by spaces.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> symbols, Unchecked) : symbols_(std::move(symbols)) {}

  friend Permutation apply_swap(const Permutation& p, int k, int l);
  friend Permutation unrank(std::uint64_t index, int n);

  std::vector<int> symbols_;
};

/// Dense lexicographic index of a permutation of [n].
struct PermRank {
  std::uint64_t index = 0;
  int n = 0;

  auto operator<=>(const PermRank&) const = default;
};

/// p(kl): exchanges the entries at positions k and l. Either order of k, l
/// is accepted; k == l or a position outside [1, n] throws ArgumentError.
Permutation apply_swap(const Permutation& p, int k, int l);

/// Lehmer-code rank in lexicographic order of one-line notation.
PermRank rank(const Permutation& p);

/// Inverse of rank. Throws ArgumentError for index >= n!.
Permutation unrank(std::uint64_t index, int n);
inline Permutation unrank(PermRank r) { return unrank(r.index, r.n); }

Parity parity(const Permutation& p);

}  // namespace cayconn
