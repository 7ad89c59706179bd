#include "cayconn/perm.hpp"

#include <algorithm>
#include <numeric>

#include "cayconn/errors.hpp"

namespace cayconn {

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankArity) {
    throw ArgumentError("factorial: arity " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxRankArity) + "]");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation::Permutation(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  const int n = size();
  if (n < 1) throw ArgumentError("permutation must have at least one symbol");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int s : symbols_) {
    if (s < 1 || s > n) {
      throw ArgumentError("symbol " + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(s)]) {
      throw ArgumentError("symbol " + std::to_string(s) + " repeated");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw ArgumentError("permutation must have at least one symbol");
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  return Permutation(std::move(s), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty() || text.size() > 9) {
    throw ArgumentError("permutation string must have 1..9 digits: '" + std::string(text) + "'");
  }
  std::vector<int> s;
  s.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw ArgumentError("bad permutation digit '" + std::string(1, c) + "' in '" +
                          std::string(text) + "'");
    }
    s.push_back(c - '0');
  }
  return Permutation(std::move(s));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw ArgumentError("position " + std::to_string(position) + " outside [1, " +
                        std::to_string(size()) + "]");
  }
  return symbols_[static_cast<std::size_t>(position - 1)];
}

int Permutation::position_of(int symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) {
    throw ArgumentError("symbol " + std::to_string(symbol) + " not in permutation");
  }
  return static_cast<int>(it - symbols_.begin()) + 1;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(symbols_[i]);
  }
  return out;
}

Permutation apply_swap(const Permutation& p, int k, int l) {
  const int n = p.size();
  if (k < 1 || k > n || l < 1 || l > n) {
    throw ArgumentError("swap positions (" + std::to_string(k) + "," + std::to_string(l) +
                        ") outside [1, " + std::to_string(n) + "]");
  }
  if (k == l) throw ArgumentError("swap positions must differ, got " + std::to_string(k) + " twice");
  std::vector<int> s = p.symbols_;
  std::swap(s[static_cast<std::size_t>(k - 1)], s[static_cast<std::size_t>(l - 1)]);
  return Permutation(std::move(s), Permutation::Unchecked{});
}

PermRank rank(const Permutation& p) {
  const int n = p.size();
  if (n > kMaxRankArity) throw CapacityError("rank: arity " + std::to_string(n) + " too large");
  // Lehmer digit i counts later symbols smaller than symbol i.
  std::uint64_t index = 0;
  auto s = p.symbols();
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (s[static_cast<std::size_t>(j)] < s[static_cast<std::size_t>(i)]) ++smaller;
    }
    index = index * static_cast<std::uint64_t>(n - i) + smaller;
  }
  return {index, n};
}

Permutation unrank(std::uint64_t index, int n) {
  if (n < 1 || n > kMaxRankArity) {
    throw ArgumentError("unrank: arity " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxRankArity) + "]");
  }
  if (index >= factorial(n)) {
    throw ArgumentError("unrank: index " + std::to_string(index) + " >= " + std::to_string(n) + "!");
  }
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(index % base);
    index /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(n));
  for (int d : digits) {
    s.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return Permutation(std::move(s), Permutation::Unchecked{});
}

Parity parity(const Permutation& p) {
  // n minus the number of cycles is the transposition count.
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int cycles = 0;
  auto s = p.symbols();
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = s[static_cast<std::size_t>(j)] - 1) {
      seen[static_cast<std::size_t>(j)] = true;
    }
  }
  return (n - cycles) % 2 == 0 ? Parity::Even : Parity::Odd;
}

}  // namespace cayconn
