#include "covering/hamming.hpp"

#include <charconv>

namespace covering {

HammingSpace::HammingSpace(unsigned q, unsigned n) : q_(q), n_(n) {
  if (q < 2) throw UsageError("alphabet size q must be at least 2, got " + std::to_string(q));
}

BigInt HammingSpace::size() const { return boost::multiprecision::pow(BigInt(q_), n_); }

bool HammingSpace::indexable() const { return size() <= (BigInt(1) << 63); }

Index HammingSpace::checked_size(Index guard) const {
  const BigInt total = size();
  if (total > guard) {
    throw GuardError("space " + std::to_string(q_) + "^" + std::to_string(n_) + " has " + total.str() +
                     " words, above the enumeration guard of " + std::to_string(guard));
  }
  return total.convert_to<Index>();
}

bool Word::belongs_to(const HammingSpace& space) const {
  if (symbols_.size() != space.n()) return false;
  return std::all_of(symbols_.begin(), symbols_.end(), [&](Symbol s) { return s < space.q(); });
}

Word Word::concat(const Word& tail) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() + tail.symbols_.size());
  out.insert(out.end(), symbols_.begin(), symbols_.end());
  out.insert(out.end(), tail.symbols_.begin(), tail.symbols_.end());
  return Word(std::move(out));
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

BigInt ball_volume(const HammingSpace& space, unsigned radius) {
  const unsigned top = std::min(radius, space.n());
  BigInt total = 0;
  BigInt power = 1;
  for (unsigned i = 0; i <= top; ++i) {
    total += power * binomial(space.n(), i);
    power *= space.q() - 1;
  }
  return total;
}

unsigned hamming_distance(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    throw UsageError("hamming_distance: word lengths differ (" + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()) + ")");
  }
  unsigned d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

std::vector<Index> radix_weights(const HammingSpace& space) {
  if (!space.indexable()) throw GuardError("space too large to index words with 64 bits");
  std::vector<Index> w(space.n());
  Index p = 1;
  for (unsigned i = space.n(); i-- > 0;) {
    w[i] = p;
    p *= space.q();
  }
  return w;
}

Index word_index(const HammingSpace& space, const Word& w) {
  if (!w.belongs_to(space)) throw UsageError("word does not belong to the space");
  if (!space.indexable()) throw GuardError("space too large to index words with 64 bits");
  Index idx = 0;
  for (Symbol s : w.symbols()) idx = idx * space.q() + s;
  return idx;
}

Word index_word(const HammingSpace& space, Index i) {
  if (!space.indexable() || BigInt(i) >= space.size()) {
    throw UsageError("index " + std::to_string(i) + " out of range for space " + std::to_string(space.q()) +
                     "^" + std::to_string(space.n()));
  }
  std::vector<Symbol> s(space.n());
  for (unsigned p = space.n(); p-- > 0;) {
    s[p] = static_cast<Symbol>(i % space.q());
    i /= space.q();
  }
  return Word(std::move(s));
}

std::vector<Word> enumerate_ball(const HammingSpace& space, const Word& center, unsigned radius) {
  std::vector<Word> out;
  for_each_in_ball(space, center, radius, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::string format_word(const HammingSpace& space, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (space.q() <= 10) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

Word parse_word(const HammingSpace& space, const std::string& text) {
  std::vector<Symbol> s;
  if (space.q() <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("invalid symbol '" + std::string(1, c) + "' in word \"" + text + "\"");
      s.push_back(static_cast<Symbol>(c - '0'));
    }
  } else if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t end = std::min(text.find(',', pos), text.size());
      Symbol v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
      if (ec != std::errc() || ptr != text.data() + end || end == pos) {
        throw ParseError("invalid symbol list in word \"" + text + "\"");
      }
      s.push_back(v);
      if (end == text.size()) break;
      pos = end + 1;
    }
  }
  Word w(std::move(s));
  if (!w.belongs_to(space)) {
    throw ParseError("word \"" + text + "\" is not in space " + std::to_string(space.q()) + "^" +
                     std::to_string(space.n()));
  }
  return w;
}

}  // namespace covering
