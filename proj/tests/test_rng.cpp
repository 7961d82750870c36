#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "hammersley/rng.hpp"

using namespace hammersley;

TEST_CASE("identical stream coordinates reproduce identical words") {
  RngStream a(SeedSpec{42}, Purpose::field, 3);
  RngStream b(SeedSpec{42}, Purpose::field, 3);
  for (std::uint64_t c = 0; c < 100; ++c) CHECK(a.word(c) == b.word(c));
}

TEST_CASE("purpose and replica separate substreams") {
  RngStream base(SeedSpec{42}, Purpose::field, 0);
  RngStream purpose(SeedSpec{42}, Purpose::sources, 0);
  RngStream replica(SeedSpec{42}, Purpose::field, 1);
  RngStream seed(SeedSpec{43}, Purpose::field, 0);
  int same_p = 0, same_r = 0, same_s = 0;
  for (std::uint64_t c = 0; c < 64; ++c) {
    same_p += base.word(c) == purpose.word(c);
    same_r += base.word(c) == replica.word(c);
    same_s += base.word(c) == seed.word(c);
  }
  CHECK(same_p == 0);
  CHECK(same_r == 0);
  CHECK(same_s == 0);
}

TEST_CASE("cell counter packs coordinates without collisions") {
  CHECK(RngStream::cell(3, 5) == ((5ull << 32) | 3ull));
  std::set<std::uint64_t> seen;
  for (int t = 0; t <= 40; ++t)
    for (int x = 0; x <= 40; ++x) seen.insert(RngStream::cell(x, t));
  CHECK(seen.size() == 41u * 41u);
}

TEST_CASE("uniform01 lies in [0,1)") {
  RngStream s(SeedSpec{7}, Purpose::weights, 0);
  for (std::uint64_t c = 0; c < 2000; ++c) {
    const double u = s.uniform01(c);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("bernoulli endpoints and mean") {
  RngStream s(SeedSpec{11}, Purpose::field, 0);
  for (std::uint64_t c = 0; c < 200; ++c) {
    CHECK_FALSE(s.bernoulli(c, 0.0));
    CHECK(s.bernoulli(c, 1.0));
  }
  const int reps = 20000;
  int ones = 0;
  for (int c = 0; c < reps; ++c) ones += s.bernoulli(static_cast<std::uint64_t>(c) + 1000, 0.3);
  const double mean = static_cast<double>(ones) / reps;
  const double sigma = std::sqrt(0.3 * 0.7 / reps);
  CHECK(std::abs(mean - 0.3) <= 5.0 * sigma);
}

TEST_CASE("geometric count matches P(0) and the mean") {
  RngStream s(SeedSpec{13}, Purpose::sinks, 0);
  const int reps = 20000;
  const double q = 0.5;  // P(k) = (1-q) q^k: mean q/(1-q) = 1, var q/(1-q)^2 = 2
  long long zeros = 0, total = 0;
  for (int c = 0; c < reps; ++c) {
    const long long k = s.geometric_count(static_cast<std::uint64_t>(c), q);
    CHECK(k >= 0);
    zeros += k == 0;
    total += k;
  }
  const double p0 = static_cast<double>(zeros) / reps;
  CHECK(std::abs(p0 - 0.5) <= 5.0 * std::sqrt(0.25 / reps));
  const double mean = static_cast<double>(total) / reps;
  CHECK(std::abs(mean - 1.0) <= 5.0 * std::sqrt(2.0 / reps));
}
