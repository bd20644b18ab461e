#include "hamrecon/scheme.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace hamrecon {

std::uint64_t max_states() {
  if (const char* env = std::getenv("HAMRECON_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultMaxStates;
}

std::uint64_t SchemeParams::size() const {
  std::uint64_t total = 1;
  for (int p = 0; p < n; ++p) {
    total *= static_cast<std::uint64_t>(q);
    if (total > std::numeric_limits<std::uint32_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return total;
}

void SchemeParams::validate() const {
  if (q < 3) throw ParameterError("alphabet size q must be at least 3, got " + std::to_string(q));
  if (q > 255) throw ParameterError("alphabet size q must be at most 255");
  if (n < 1) throw ParameterError("dimension n must be at least 1, got " + std::to_string(n));
  if (n > 32) throw ParameterError("dimension n must be at most 32");
  const std::uint64_t cap = max_states();
  if (size() > cap) {
    throw ParameterError("q^n exceeds the enumeration cap of " + std::to_string(cap) +
                         " (set HAMRECON_MAX_STATES to raise it)");
  }
}

Word::Word(std::initializer_list<int> digits) {
  digits_.reserve(digits.size());
  for (int d : digits) digits_.push_back(static_cast<std::uint8_t>(d));
}

Word Word::parse(std::string_view text, const SchemeParams& params) {
  if (text.size() != static_cast<std::size_t>(params.n)) {
    throw ParameterError("word '" + std::string(text) + "' must have exactly " + std::to_string(params.n) + " digits");
  }
  std::vector<std::uint8_t> digits;
  digits.reserve(text.size());
  for (char c : text) {
    int value = -1;
    if (c >= '0' && c <= '9') value = c - '0';
    else if (c >= 'a' && c <= 'z') value = c - 'a' + 10;
    else if (c >= 'A' && c <= 'Z') value = c - 'A' + 10;
    if (value < 0 || value >= params.q) {
      throw ParameterError("word '" + std::string(text) + "' has a digit outside [0, q-1]");
    }
    digits.push_back(static_cast<std::uint8_t>(value));
  }
  return Word(std::move(digits));
}

Word Word::unrank(std::uint64_t rank, const SchemeParams& params) {
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(params.n));
  for (int p = params.n - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(rank % static_cast<std::uint64_t>(params.q));
    rank /= static_cast<std::uint64_t>(params.q);
  }
  return Word(std::move(digits));
}

std::uint64_t Word::rank(int q) const {
  std::uint64_t r = 0;
  for (std::uint8_t d : digits_) r = r * static_cast<std::uint64_t>(q) + d;
  return r;
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (std::uint8_t d : digits_) out.push_back(d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10));
  return out;
}

void Word::validate(const SchemeParams& params) const {
  if (digits_.size() != static_cast<std::size_t>(params.n)) {
    throw ParameterError("word length " + std::to_string(digits_.size()) + " does not match n = " +
                         std::to_string(params.n));
  }
  for (std::uint8_t d : digits_) {
    if (d >= params.q) throw ParameterError("word digit outside [0, q-1]");
  }
}

IndexSet::IndexSet(int n, std::vector<int> positions) : n_(n), positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
    throw ParameterError("index set has repeated positions");
  }
  for (int p : positions_) {
    if (p < 1 || p > n_) throw ParameterError("index set position " + std::to_string(p) + " outside [1, n]");
  }
}

IndexSet IndexSet::from_mask(int n, std::uint32_t mask) {
  std::vector<int> positions;
  for (int p = 0; p < n; ++p) {
    if (mask & (1u << p)) positions.push_back(p + 1);
  }
  return IndexSet(n, std::move(positions));
}

IndexSet IndexSet::full(int n) {
  std::vector<int> positions(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) positions[static_cast<std::size_t>(p)] = p + 1;
  return IndexSet(n, std::move(positions));
}

bool IndexSet::contains(int position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

IndexSet IndexSet::complement() const {
  std::vector<int> rest;
  for (int p = 1; p <= n_; ++p) {
    if (!contains(p)) rest.push_back(p);
  }
  return IndexSet(n_, std::move(rest));
}

std::uint32_t IndexSet::mask() const {
  std::uint32_t m = 0;
  for (int p : positions_) m |= 1u << (p - 1);
  return m;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(positions_[i]);
  }
  return out + "}";
}

std::vector<IndexSet> subsets_of_size(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

int hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw ParameterError("hamming_distance: dimension mismatch");
  int d = 0;
  for (std::size_t p = 0; p < a.size(); ++p) d += a[p] != b[p];
  return d;
}

WeightSupport weight_support(const Word& a) {
  std::vector<int> positions;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] != 0) positions.push_back(static_cast<int>(p) + 1);
  }
  const int w = static_cast<int>(positions.size());
  return {w, IndexSet(static_cast<int>(a.size()), std::move(positions))};
}

int weight(const Word& a) {
  int w = 0;
  for (std::uint8_t d : a.digits()) w += d != 0;
  return w;
}

int inner_product(const Word& a, const Word& b, int q) {
  if (a.size() != b.size()) throw ParameterError("inner_product: dimension mismatch");
  long sum = 0;
  for (std::size_t p = 0; p < a.size(); ++p) sum += static_cast<long>(a[p]) * b[p];
  return static_cast<int>(sum % q);
}

namespace {

// Visits every assignment of digits in [lo, q-1] to the positions of `free`, keeping `base`
// elsewhere, in lexicographic order of the resulting words.
void for_each_assignment(const Word& base, const std::vector<int>& free, int lo, int q,
                         const std::function<void(const Word&)>& visit) {
  Word w = base;
  for (int p : free) w[static_cast<std::size_t>(p - 1)] = static_cast<std::uint8_t>(lo);
  while (true) {
    visit(w);
    int i = static_cast<int>(free.size()) - 1;
    while (i >= 0) {
      auto& digit = w[static_cast<std::size_t>(free[static_cast<std::size_t>(i)] - 1)];
      if (digit + 1 < q) {
        ++digit;
        break;
      }
      digit = static_cast<std::uint8_t>(lo);
      --i;
    }
    if (i < 0) return;
  }
}

void check_center(const SchemeParams& params, const Word& center) { center.validate(params); }

void check_positions(const SchemeParams& params, const IndexSet& positions) {
  if (positions.n() != params.n) throw ParameterError("index set dimension does not match n");
}

}  // namespace

std::vector<Word> sphere(const SchemeParams& params, const Word& center, int radius) {
  check_center(params, center);
  if (radius < 0 || radius > params.n) throw ParameterError("sphere radius outside [0, n]");
  std::vector<Word> out;
  for (const IndexSet& where : subsets_of_size(params.n, radius)) {
    // Each chosen position takes one of the q-1 digits different from the center.
    for_each_assignment(Word::zero(params.n), where.positions(), 1, params.q, [&](const Word& shift) {
      Word w = center;
      for (int p : where.positions()) {
        auto idx = static_cast<std::size_t>(p - 1);
        w[idx] = static_cast<std::uint8_t>((center[idx] + shift[idx]) % params.q);
      }
      out.push_back(std::move(w));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> ball(const SchemeParams& params, const Word& center, int radius) {
  check_center(params, center);
  if (radius < 0 || radius > params.n) throw ParameterError("ball radius outside [0, n]");
  std::vector<Word> out;
  for (int r = 0; r <= radius; ++r) {
    auto layer = sphere(params, center, r);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> face(const SchemeParams& params, const IndexSet& free, const Word& anchor) {
  check_center(params, anchor);
  check_positions(params, free);
  std::vector<Word> out;
  for_each_assignment(anchor, free.positions(), 0, params.q, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Word> full_support(const SchemeParams& params, const IndexSet& support) {
  check_positions(params, support);
  std::vector<Word> out;
  for_each_assignment(Word::zero(params.n), support.positions(), 1, params.q, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<std::uint32_t> full_support_ranks(const SchemeParams& params, const IndexSet& support) {
  std::vector<std::uint32_t> out;
  for (const Word& w : full_support(params, support)) out.push_back(static_cast<std::uint32_t>(w.rank(params.q)));
  return out;
}

std::vector<Word> enumerate_region(const SchemeParams& params, const Region& region) {
  switch (region.kind) {
    case RegionKind::sphere:
      return sphere(params, region.center, region.radius);
    case RegionKind::ball:
      return ball(params, region.center, region.radius);
    case RegionKind::face:
      return face(params, region.positions, region.center);
    case RegionKind::full_support:
      return full_support(params, region.positions);
  }
  return {};
}

Cube::Cube(const SchemeParams& params) : params_(params) {
  params_.validate();
  size_ = static_cast<std::uint32_t>(params_.size());
  const auto n = static_cast<std::size_t>(params_.n);
  digits_.resize(static_cast<std::size_t>(size_) * n);
  weights_.resize(size_);
  supports_.resize(size_);
  for (std::uint32_t r = 0; r < size_; ++r) {
    std::uint32_t rest = r;
    int w = 0;
    std::uint32_t mask = 0;
    for (int p = params_.n - 1; p >= 0; --p) {
      const auto d = static_cast<std::uint8_t>(rest % static_cast<std::uint32_t>(params_.q));
      rest /= static_cast<std::uint32_t>(params_.q);
      digits_[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(p)] = d;
      if (d) {
        ++w;
        mask |= 1u << p;
      }
    }
    weights_[r] = static_cast<std::uint8_t>(w);
    supports_[r] = mask;
  }
}

std::uint32_t Cube::add(std::uint32_t a, std::uint32_t b) const {
  auto da = digits(a);
  auto db = digits(b);
  std::uint32_t r = 0;
  for (std::size_t p = 0; p < da.size(); ++p) {
    r = r * static_cast<std::uint32_t>(params_.q) + (da[p] + db[p]) % static_cast<std::uint32_t>(params_.q);
  }
  return r;
}

std::uint32_t Cube::splice(std::uint32_t anchor, std::uint32_t digits_of, std::uint32_t mask) const {
  auto da = digits(anchor);
  auto db = digits(digits_of);
  std::uint32_t r = 0;
  for (std::size_t p = 0; p < da.size(); ++p) {
    r = r * static_cast<std::uint32_t>(params_.q) + ((mask >> p) & 1u ? db[p] : da[p]);
  }
  return r;
}

int Cube::distance(std::uint32_t a, std::uint32_t b) const {
  auto da = digits(a);
  auto db = digits(b);
  int d = 0;
  for (std::size_t p = 0; p < da.size(); ++p) d += da[p] != db[p];
  return d;
}

std::vector<std::uint32_t> Cube::weight_class(int r) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < size_; ++x) {
    if (weights_[x] == r) out.push_back(x);
  }
  return out;
}

}  // namespace hamrecon
