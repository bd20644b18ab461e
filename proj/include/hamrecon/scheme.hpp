#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamrecon/errors.hpp"

namespace hamrecon {

/// Default limit on q^n. Overridden by the HAMRECON_MAX_STATES environment variable.
inline constexpr std::uint64_t kDefaultMaxStates = 4096 * 16;

std::uint64_t max_states();

/// Alphabet size and dimension of the q-ary n-dimensional hypercube.
struct SchemeParams {
  int q = 3;
  int n = 1;

  /// Throws ParameterError unless q >= 3, n >= 1 and q^n is within max_states().
  void validate() const;
  std::uint64_t size() const;

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// A length-n string of digits in [0, q-1]. Digit access is 0-based; text form is most significant first.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}
  Word(std::initializer_list<int> digits);

  static Word zero(int n) { return Word(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)); }
  static Word parse(std::string_view text, const SchemeParams& params);
  static Word unrank(std::uint64_t rank, const SchemeParams& params);

  std::size_t size() const { return digits_.size(); }
  std::uint8_t operator[](std::size_t pos) const { return digits_[pos]; }
  std::uint8_t& operator[](std::size_t pos) { return digits_[pos]; }
  std::span<const std::uint8_t> digits() const { return digits_; }

  /// Base-q positional value, position 1 most significant.
  std::uint64_t rank(int q) const;
  std::string to_string() const;
  void validate(const SchemeParams& params) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

/// Subset of positions {1..n}, kept sorted. Positions are 1-based.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::vector<int> positions);
  IndexSet(int n, std::initializer_list<int> positions) : IndexSet(n, std::vector<int>(positions)) {}

  static IndexSet from_mask(int n, std::uint32_t mask);
  static IndexSet full(int n);

  int n() const { return n_; }
  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  const std::vector<int>& positions() const { return positions_; }
  bool contains(int position) const;
  IndexSet complement() const;
  /// Bit p-1 set for each position p.
  std::uint32_t mask() const;
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int n_ = 0;
  std::vector<int> positions_;
};

/// All size-k subsets of {1..n} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int k);

int hamming_distance(const Word& a, const Word& b);

struct WeightSupport {
  int weight = 0;
  IndexSet support;
};

WeightSupport weight_support(const Word& a);
int weight(const Word& a);

/// Sum of a_i b_i mod q.
int inner_product(const Word& a, const Word& b, int q);

enum class RegionKind { sphere, ball, face, full_support };

struct Region {
  RegionKind kind = RegionKind::sphere;
  Word center;
  int radius = 0;
  IndexSet positions;
};

/// Words of a region in lexicographic order.
std::vector<Word> enumerate_region(const SchemeParams& params, const Region& region);

std::vector<Word> sphere(const SchemeParams& params, const Word& center, int radius);
std::vector<Word> ball(const SchemeParams& params, const Word& center, int radius);
/// Words agreeing with the anchor outside `free`.
std::vector<Word> face(const SchemeParams& params, const IndexSet& free, const Word& anchor);
/// Words whose support is exactly `support`.
std::vector<Word> full_support(const SchemeParams& params, const IndexSet& support);

/// Ranks of the full-support words of `support`, ordered so that the i-th entry corresponds to
/// rank i of the (q-1)-ary |support|-dimensional word obtained by mapping digit v to v-1.
std::vector<std::uint32_t> full_support_ranks(const SchemeParams& params, const IndexSet& support);

/// Dense digit table for every vertex; used by the enumeration-heavy kernels.
class Cube {
 public:
  explicit Cube(const SchemeParams& params);

  const SchemeParams& params() const { return params_; }
  std::uint32_t size() const { return size_; }
  std::span<const std::uint8_t> digits(std::uint32_t rank) const {
    return {digits_.data() + static_cast<std::size_t>(rank) * params_.n, static_cast<std::size_t>(params_.n)};
  }
  int weight(std::uint32_t rank) const { return weights_[rank]; }
  std::uint32_t support_mask(std::uint32_t rank) const { return supports_[rank]; }
  /// Rank of (a + b) mod q digitwise.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  /// Rank of the word equal to `anchor` off `mask` and to `digits_of` on `mask`.
  std::uint32_t splice(std::uint32_t anchor, std::uint32_t digits_of, std::uint32_t mask) const;
  int distance(std::uint32_t a, std::uint32_t b) const;
  /// Ranks of all words of weight r, ascending.
  std::vector<std::uint32_t> weight_class(int r) const;

 private:
  SchemeParams params_;
  std::uint32_t size_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::uint8_t> weights_;
  std::vector<std::uint32_t> supports_;
};

}  // namespace hamrecon
