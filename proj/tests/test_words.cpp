#include "doctest.h"

#include <random>
#include <stdexcept>

#include "fadlab/words.hpp"

using namespace fadlab;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> idx_dist(1, rank);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  int len = len_dist(rng);
  std::vector<int> raw;
  raw.reserve(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) {
    int idx = idx_dist(rng);
    raw.push_back(sign_dist(rng) ? idx : -idx);
  }
  return Word(rank, std::move(raw));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(Word(3, {1, 2, -2, 3}) == Word(3, {1, 3}));
  CHECK(Word(3, {}) == Word(3));
  CHECK(Word(3, {1, -1, 1}) == Word(3, {1}));
  // nested cancellation collapses fully
  CHECK(Word(2, {1, 2, -2, -1}).is_identity());
  CHECK_THROWS_AS(Word(2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(Word(2, {0}), std::invalid_argument);
}

TEST_CASE("concat and invert") {
  Word a(3, {1, 2});
  Word b(3, {-2, 1});
  CHECK(concat(a, b) == Word(3, {1, 1}));
  CHECK(concat(a, Word(3)) == a);
  CHECK(concat(Word(3, {1}), Word(3, {-1})).is_identity());
  CHECK(invert(Word(3, {1, 2})) == Word(3, {-2, -1}));
  CHECK(invert(Word(3)).is_identity());
  CHECK(invert(Word(3, {-3})) == Word(3, {3}));
  CHECK_THROWS_AS(concat(Word(2, {1}), Word(3, {1})), std::invalid_argument);
}

TEST_CASE("substitute") {
  // x1 -> x1 x2, x2 -> x2
  std::vector<Word> rho12 = {Word(2, {1, 2}), Word(2, {2})};
  CHECK(substitute(Word(2, {1, 2}), rho12) == Word(2, {1, 2, 2}));
  std::vector<Word> e2 = {Word(2, {1}), Word(2, {-2})};
  CHECK(substitute(Word(2, {-2}), e2) == Word(2, {2}));
  std::vector<Word> ident = {Word(2, {1}), Word(2, {2})};
  CHECK(substitute(Word(2, {1}), ident) == Word(2, {1}));
  CHECK_THROWS_AS(substitute(Word(3, {1}), rho12), std::invalid_argument);
}

TEST_CASE("parse and print round-trip") {
  CHECK(Word::parse(3, "x1*x2^-1*x3").str() == "x1*x2^-1*x3");
  CHECK(Word::parse(3, "  x1 * x2 ^-1 *x3 ").str() == "x1*x2^-1*x3");
  CHECK(Word::parse(3, "1").is_identity());
  CHECK(Word(3).str() == "1");
  // parsing reduces
  CHECK(Word::parse(3, "x1*x1^-1").is_identity());
  CHECK_THROWS_AS(Word::parse(3, "x4"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(3, "y1"), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 4, 32);
    CHECK(Word::parse(4, w.str()) == w);
  }
}

TEST_CASE("group laws on random words") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Word a = random_word(rng, 3, 32);
    Word b = random_word(rng, 3, 32);
    Word c = random_word(rng, 3, 32);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, Word(3)) == a);
    CHECK(concat(Word(3), a) == a);
    CHECK(concat(a, invert(a)).is_identity());
    CHECK(concat(invert(a), a).is_identity());
    CHECK(invert(invert(a)) == a);
    CHECK(concat(a, b).length() <= a.length() + b.length());
  }
}

TEST_CASE("reduction is idempotent") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 4, 32);
    CHECK(Word(4, w.letters()) == w);
  }
}

TEST_CASE("substitute distributes over concat") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Word a = random_word(rng, 3, 16);
    Word b = random_word(rng, 3, 16);
    std::vector<Word> images;
    for (int k = 0; k < 3; ++k) images.push_back(random_word(rng, 3, 6));
    CHECK(substitute(concat(a, b), images) ==
          concat(substitute(a, images), substitute(b, images)));
  }
}
