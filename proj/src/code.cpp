#include "covering/code.hpp"

#include <algorithm>
#include <bit>

#include "covering/random.hpp"

namespace covering {

Code::Code(HammingSpace space, std::vector<Word> words) : space_(space), words_(std::move(words)) {
  for (const Word& w : words_) {
    if (!w.belongs_to(space_)) throw UsageError("codeword is not a word of the code's space");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

Code Code::whole_space(const HammingSpace& space, Index guard) {
  const Index total = space.checked_size(guard);
  Code out(space);
  out.words_.reserve(total);
  for (Index i = 0; i < total; ++i) out.words_.push_back(index_word(space, i));
  return out;
}

Code Code::from_indices(const HammingSpace& space, std::vector<Index> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  Code out(space);
  out.words_.reserve(indices.size());
  for (Index i : indices) out.words_.push_back(index_word(space, i));
  return out;
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

void Code::insert(const Word& w) {
  if (!w.belongs_to(space_)) throw UsageError("codeword is not a word of the code's space");
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) words_.insert(it, w);
}

std::vector<Index> Code::indices() const {
  std::vector<Index> out;
  out.reserve(words_.size());
  for (const Word& w : words_) out.push_back(word_index(space_, w));
  return out;
}

std::string DensityValue::exact_string() const {
  const BigInt num = boost::multiprecision::numerator(exact);
  const BigInt den = boost::multiprecision::denominator(exact);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

CoverVerdict verify_covering(const Code& code, unsigned radius, Index guard) {
  const HammingSpace& space = code.space();
  const Index total = space.checked_size(guard);
  const auto weights = radix_weights(space);
  std::vector<std::uint64_t> marked((total + 63) / 64, 0);
  for (const Word& c : code.words()) {
    for_each_in_ball_index(space, weights, word_index(space, c), radius,
                           [&](Index i) { marked[i >> 6] |= std::uint64_t{1} << (i & 63); });
  }
  for (std::size_t block = 0; block < marked.size(); ++block) {
    std::uint64_t missing = ~marked[block];
    if (block + 1 == marked.size() && total % 64 != 0) missing &= (std::uint64_t{1} << (total % 64)) - 1;
    if (missing != 0) {
      const Index first = block * 64 + static_cast<Index>(std::countr_zero(missing));
      return {CoverStatus::uncovered, index_word(space, first)};
    }
  }
  return {CoverStatus::covered, std::nullopt};
}

namespace {

bool covered_by_scan(const Code& code, const Word& w, unsigned radius) {
  return std::any_of(code.words().begin(), code.words().end(),
                     [&](const Word& c) { return hamming_distance(c, w) <= radius; });
}

}  // namespace

CoverVerdict verify_covering_scan(const Code& code, unsigned radius, Index guard) {
  const Index total = code.space().checked_size(guard);
  for (Index i = 0; i < total; ++i) {
    Word w = index_word(code.space(), i);
    if (!covered_by_scan(code, w, radius)) return {CoverStatus::uncovered, std::move(w)};
  }
  return {CoverStatus::covered, std::nullopt};
}

CoverVerdict verify_covering_sampled(const Code& code, unsigned radius, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw UsageError("verify_covering_sampled needs at least one sample");
  const HammingSpace& space = code.space();
  Rng rng = derived_rng(seed, 0);
  std::vector<Symbol> buf(space.n());
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& sym : buf) sym = static_cast<Symbol>(uniform_below(rng, space.q()));
    Word w(buf);
    if (!covered_by_scan(code, w, radius)) return {CoverStatus::uncovered, std::move(w)};
  }
  return {CoverStatus::no_counterexample, std::nullopt};
}

DensityValue density_of_size(const HammingSpace& space, const BigInt& size, unsigned radius) {
  DensityValue d;
  d.exact = Rational(size * ball_volume(space, radius), space.size());
  d.approx = d.exact.convert_to<double>();
  return d;
}

DensityValue density(const Code& code, unsigned radius) {
  return density_of_size(code.space(), BigInt(code.size()), radius);
}

BigInt sphere_covering_lower_bound(const HammingSpace& space, unsigned radius) {
  const BigInt total = space.size();
  const BigInt vol = ball_volume(space, radius);
  return (total + vol - 1) / vol;
}

Code translate(const Code& code, const Word& shift) {
  const HammingSpace& space = code.space();
  if (!shift.belongs_to(space)) throw UsageError("translation vector is not a word of the space");
  std::vector<Word> out;
  out.reserve(code.size());
  std::vector<Symbol> buf(space.n());
  for (const Word& w : code.words()) {
    for (unsigned i = 0; i < space.n(); ++i) buf[i] = (w[i] + space.q() - shift[i]) % space.q();
    out.emplace_back(buf);
  }
  return Code(space, std::move(out));
}

}  // namespace covering
