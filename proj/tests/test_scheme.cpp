#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hamrecon/exact.hpp"
#include "hamrecon/scheme.hpp"

using namespace hamrecon;

namespace {
const SchemeParams k34{3, 4};
Word w(const char* text, const SchemeParams& p) { return Word::parse(text, p); }
}  // namespace

TEST_CASE("hamming distance") {
  const SchemeParams p33{3, 3};
  CHECK(hamming_distance(w("000", p33), w("000", p33)) == 0);
  CHECK(hamming_distance(w("012", p33), w("010", p33)) == 1);
  CHECK(hamming_distance(w("0121", k34), w("1212", k34)) == 4);
  CHECK_THROWS_AS(hamming_distance(Word{0, 1}, Word{0, 1, 2}), ParameterError);
}

TEST_CASE("weight and support") {
  const auto zero = weight_support(w("0000", k34));
  CHECK(zero.weight == 0);
  CHECK(zero.support.empty());
  const auto ws = weight_support(w("0102", k34));
  CHECK(ws.weight == 2);
  CHECK(ws.support.positions() == std::vector<int>{2, 4});
  for (std::uint64_t r = 0; r < k34.size(); ++r) {
    const Word a = Word::unrank(r, k34);
    CHECK(weight(a) == hamming_distance(a, Word::zero(4)));
  }
}

TEST_CASE("regions") {
  const SchemeParams p32{3, 2};
  const auto s = sphere(p32, w("00", p32), 1);
  std::vector<std::string> texts;
  for (const auto& x : s) texts.push_back(x.to_string());
  CHECK(texts == std::vector<std::string>{"01", "02", "10", "20"});

  const auto f = face(p32, IndexSet(2, {1}), w("00", p32));
  texts.clear();
  for (const auto& x : f) texts.push_back(x.to_string());
  CHECK(texts == std::vector<std::string>{"00", "10", "20"});

  const auto fs = full_support(p32, IndexSet(2, {1, 2}));
  texts.clear();
  for (const auto& x : fs) texts.push_back(x.to_string());
  CHECK(texts == std::vector<std::string>{"11", "12", "21", "22"});

  CHECK_THROWS_AS(sphere(p32, w("00", p32), 3), ParameterError);
  CHECK_THROWS_AS(IndexSet(2, {0}), ParameterError);
  CHECK_THROWS_AS(IndexSet(2, {1, 1}), ParameterError);
}

TEST_CASE("region sizes match the counting formulas") {
  for (int q : {3, 4}) {
    for (int n : {2, 3, 4}) {
      const SchemeParams p{q, n};
      std::mt19937 rng(5);
      const Word center = Word::unrank(rng() % p.size(), p);
      std::size_t ball_size = 0;
      for (int r = 0; r <= n; ++r) {
        const auto s = sphere(p, center, r);
        const BigInt expected = binomial(n, r) * power(q - 1, static_cast<unsigned long>(r));
        CHECK(s.size() == expected.get_ui());
        for (const auto& x : s) CHECK(hamming_distance(x, center) == r);
        ball_size += s.size();
        CHECK(ball(p, center, r).size() == ball_size);
      }
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const IndexSet I = IndexSet::from_mask(n, mask);
        CHECK(face(p, I, center).size() == power(q, static_cast<unsigned long>(I.size())).get_ui());
        CHECK(full_support(p, I).size() == power(q - 1, static_cast<unsigned long>(I.size())).get_ui());
        // Orthogonal faces meet in exactly the anchor.
        const auto a = face(p, I, center);
        const auto b = face(p, I.complement(), center);
        std::vector<Word> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        REQUIRE(common.size() == 1);
        CHECK(common[0] == center);
      }
    }
  }
}

TEST_CASE("full-support words form a (q-1)-ary Hamming space") {
  for (int q : {3, 4}) {
    for (int k = 1; k <= 3; ++k) {
      const SchemeParams p{q, 4};
      const IndexSet I = subsets_of_size(4, k).back();
      const auto words = full_support(p, I);
      const auto ranks = full_support_ranks(p, I);
      for (std::size_t a = 0; a < words.size(); ++a) {
        CHECK(ranks[a] == words[a].rank(q));
        for (std::size_t b = 0; b < words.size(); ++b) {
          // Relabel the sub-scheme index back into digits 0..q-2.
          int sub = 0;
          std::size_t x = a, y = b;
          for (int p2 = 0; p2 < k; ++p2) {
            sub += (x % static_cast<std::size_t>(q - 1)) != (y % static_cast<std::size_t>(q - 1));
            x /= static_cast<std::size_t>(q - 1);
            y /= static_cast<std::size_t>(q - 1);
          }
          CHECK(hamming_distance(words[a], words[b]) == sub);
        }
      }
    }
  }
}

TEST_CASE("inner product") {
  const SchemeParams p2{3, 2};
  CHECK(inner_product(w("12", p2), w("21", p2), 3) == 1);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Word a = Word::unrank(rng() % k34.size(), k34);
    const Word b = Word::unrank(rng() % k34.size(), k34);
    CHECK(inner_product(Word::zero(4), b, 3) == 0);
    CHECK(inner_product(a, b, 3) == inner_product(b, a, 3));
  }
}

TEST_CASE("word text form and ranks") {
  const Word a = w("0120", k34);
  CHECK(a.to_string() == "0120");
  CHECK(a.rank(3) == 0 * 27 + 1 * 9 + 2 * 3 + 0);
  CHECK(Word::unrank(a.rank(3), k34) == a);
  CHECK_THROWS_AS(Word::parse("0130", k34), ParameterError);
  CHECK_THROWS_AS(Word::parse("012", k34), ParameterError);
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(IndexSet(4, {3, 1}).complement().positions() == std::vector<int>{2, 4});
}

TEST_CASE("parameter validation and enumeration cap") {
  CHECK_THROWS_AS((SchemeParams{2, 4}.validate()), ParameterError);
  CHECK_THROWS_AS((SchemeParams{3, 0}.validate()), ParameterError);
  CHECK_THROWS_AS((SchemeParams{3, 20}.validate()), ParameterError);
  CHECK_NOTHROW((SchemeParams{4, 8}.validate()));
}

TEST_CASE("cube helpers agree with word arithmetic") {
  const Cube cube(k34);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t a = rng() % cube.size();
    const std::uint32_t b = rng() % cube.size();
    const Word wa = Word::unrank(a, k34), wb = Word::unrank(b, k34);
    CHECK(cube.distance(a, b) == hamming_distance(wa, wb));
    CHECK(cube.weight(a) == weight(wa));
    CHECK(cube.support_mask(a) == weight_support(wa).support.mask());
    Word sum = wa;
    for (std::size_t p = 0; p < 4; ++p) sum[p] = static_cast<std::uint8_t>((wa[p] + wb[p]) % 3);
    CHECK(cube.add(a, b) == sum.rank(3));
  }
}
