#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covering/errors.hpp"

namespace covering {

using BigInt = boost::multiprecision::cpp_int;
using Symbol = std::uint32_t;
/// Position of a word in the mixed-radix order of its space.
using Index = std::uint64_t;

/// Largest q^n accepted by full-space scans unless the caller raises it.
inline constexpr Index kDefaultEnumerationGuard = Index{1} << 26;

/// The space [q]^n of words of length n over the alphabet {0, ..., q-1}.
class HammingSpace {
 public:
  HammingSpace(unsigned q, unsigned n);

  unsigned q() const noexcept { return q_; }
  unsigned n() const noexcept { return n_; }

  /// q^n, exact.
  BigInt size() const;

  /// True when every word has an Index (q^n <= 2^63).
  bool indexable() const;

  /// q^n as an Index; throws GuardError when it exceeds `guard`.
  Index checked_size(Index guard = kDefaultEnumerationGuard) const;

  friend bool operator==(const HammingSpace&, const HammingSpace&) = default;

 private:
  unsigned q_;
  unsigned n_;
};

/// A point of [q]^n. Ordering is lexicographic, which matches Index order.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  static Word zero(unsigned n) { return Word(std::vector<Symbol>(n, 0)); }

  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  bool belongs_to(const HammingSpace& space) const;

  /// (this, tail) as one word of length size() + tail.size().
  Word concat(const Word& tail) const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

BigInt binomial(unsigned n, unsigned k);

/// V_q(n,R) = sum_{i=0}^{min(R,n)} (q-1)^i C(n,i).
BigInt ball_volume(const HammingSpace& space, unsigned radius);

/// Number of coordinates where u and v differ. Throws UsageError on length mismatch.
unsigned hamming_distance(const Word& u, const Word& v);

Index word_index(const HammingSpace& space, const Word& w);
Word index_word(const HammingSpace& space, Index i);

/// weights[i] = q^(n-1-i); word_index(w) = sum w[i] * weights[i].
std::vector<Index> radix_weights(const HammingSpace& space);

/// Calls visit(const Word&) once for every word within `radius` of `center`.
/// Words are generated by choosing i positions then one of the (q-1)^i
/// replacement patterns, for i = 0..radius, so no word repeats.
template <class Visit>
void for_each_in_ball(const HammingSpace& space, const Word& center, unsigned radius, Visit&& visit) {
  if (!center.belongs_to(space)) throw UsageError("ball center is not a word of the space");
  std::vector<Symbol> cur(center.symbols().begin(), center.symbols().end());
  const unsigned n = space.n();
  const unsigned q = space.q();
  auto choose = [&](auto&& self, unsigned from, unsigned left) -> void {
    if (left == 0) {
      visit(Word(cur));
      return;
    }
    for (unsigned p = from; p + left <= n; ++p) {
      const Symbol orig = cur[p];
      for (Symbol s = 0; s < q; ++s) {
        if (s == orig) continue;
        cur[p] = s;
        self(self, p + 1, left - 1);
      }
      cur[p] = orig;
    }
  };
  const unsigned top = std::min(radius, n);
  for (unsigned i = 0; i <= top; ++i) choose(choose, 0, i);
}

/// Index-level variant of for_each_in_ball; calls visit(Index).
/// `weights` must be radix_weights(space).
template <class Visit>
void for_each_in_ball_index(const HammingSpace& space, std::span<const Index> weights, Index center,
                            unsigned radius, Visit&& visit) {
  const unsigned n = space.n();
  const unsigned q = space.q();
  std::vector<Symbol> digits(n);
  for (unsigned i = 0; i < n; ++i) digits[i] = static_cast<Symbol>((center / weights[i]) % q);
  auto choose = [&](auto&& self, unsigned from, unsigned left, Index idx) -> void {
    if (left == 0) {
      visit(idx);
      return;
    }
    for (unsigned p = from; p + left <= n; ++p) {
      const Index base = idx - digits[p] * weights[p];
      for (Symbol s = 0; s < q; ++s) {
        if (s == digits[p]) continue;
        self(self, p + 1, left - 1, base + s * weights[p]);
      }
    }
  };
  const unsigned top = std::min(radius, n);
  for (unsigned i = 0; i <= top; ++i) choose(choose, 0, i, center);
}

std::vector<Word> enumerate_ball(const HammingSpace& space, const Word& center, unsigned radius);

/// Text form: n digits for q <= 10, comma-separated integers otherwise.
std::string format_word(const HammingSpace& space, const Word& w);
Word parse_word(const HammingSpace& space, const std::string& text);

}  // namespace covering
