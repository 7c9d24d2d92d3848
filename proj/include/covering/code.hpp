#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covering/hamming.hpp"

namespace covering {

using Rational = boost::multiprecision::cpp_rational;

/// A set of words of one Hamming space, kept sorted and free of duplicates.
class Code {
 public:
  explicit Code(HammingSpace space) : space_(space) {}
  Code(HammingSpace space, std::vector<Word> words);

  static Code whole_space(const HammingSpace& space, Index guard = kDefaultEnumerationGuard);
  static Code from_indices(const HammingSpace& space, std::vector<Index> indices);

  const HammingSpace& space() const noexcept { return space_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  bool contains(const Word& w) const;
  void insert(const Word& w);

  /// Sorted word indices; requires an indexable space.
  std::vector<Index> indices() const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  HammingSpace space_;
  std::vector<Word> words_;
};

/// |K| * V_q(n,R) / q^n.
struct DensityValue {
  Rational exact;
  double approx = 0.0;

  /// "num/den" (or "num" when integral).
  std::string exact_string() const;
};

enum class CoverStatus { covered, no_counterexample, uncovered };

/// Outcome of a covering check. `no_counterexample` only comes from sampling
/// and is not a proof; `uncovered` always carries a witness.
struct CoverVerdict {
  CoverStatus status = CoverStatus::covered;
  std::optional<Word> witness;

  bool ok() const noexcept { return status != CoverStatus::uncovered; }
};

/// Exhaustive check: marks the balls of every codeword on a q^n bitmap.
/// The witness, if any, is the lexicographically smallest uncovered word.
CoverVerdict verify_covering(const Code& code, unsigned radius, Index guard = kDefaultEnumerationGuard);

/// Exhaustive check by comparing every word with every codeword. Slow; kept
/// as an independent oracle for verify_covering.
CoverVerdict verify_covering_scan(const Code& code, unsigned radius, Index guard = kDefaultEnumerationGuard);

/// Tests `samples` uniformly random words. One-sided.
CoverVerdict verify_covering_sampled(const Code& code, unsigned radius, std::uint64_t samples,
                                     std::uint64_t seed);

DensityValue density(const Code& code, unsigned radius);
DensityValue density_of_size(const HammingSpace& space, const BigInt& size, unsigned radius);

/// ceil(q^n / V_q(n,R)).
BigInt sphere_covering_lower_bound(const HammingSpace& space, unsigned radius);

/// K - c, symbol-wise mod q. Preserves covering and size.
Code translate(const Code& code, const Word& shift);

}  // namespace covering
