#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cryptsteg/error.hpp"
#include "cryptsteg/scheduler.hpp"

using namespace cryptsteg;

TEST_CASE("SplitMix64 published outputs for seed 0") {
  SplitMix64 gen(0);
  CHECK(gen.next_u64() == 0xE220A8397B1DCDAFULL);
  CHECK(gen.next_u64() == 0x6E789E6AA1B965F4ULL);
}

TEST_CASE("SplitMix64 is deterministic") {
  SplitMix64 a(0xdeadbeef), b(0xdeadbeef);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("StegoKey text form") {
  CHECK(StegoKey::parse("0").seed() == 0);
  CHECK(StegoKey::parse("ffffffffffffffff").seed() == UINT64_MAX);
  CHECK(StegoKey::parse("00ff").to_string() == "ff");
  for (const char* bad : {"", "0x1", "FF", "g", "11111111111111111", " 1", "-1"}) {
    INFO(bad);
    CHECK_THROWS_AS(StegoKey::parse(bad), Error);
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const StegoKey k(rng());
    REQUIRE(StegoKey::parse(k.to_string()) == k);
  }
}

TEST_CASE("small cases") {
  CHECK(slot_sequence(StegoKey(9), 5, 0).indices.empty());
  CHECK(slot_sequence(StegoKey(9), 1, 1).indices == std::vector<std::uint64_t>{0});
  CHECK_THROWS_AS(slot_sequence(StegoKey(9), 5, 6), Error);
}

TEST_CASE("seed 0 over 48 slots matches the scripted oracle") {
  const std::vector<std::uint64_t> expected{31, 28, 29, 37, 11, 16, 35, 38, 27, 6,  25, 20,
                                            39, 14, 21, 0,  3,  26, 30, 34, 12, 45, 36, 33,
                                            23, 13, 32, 43, 46, 10, 8,  5,  17, 42, 47, 1,
                                            19, 7,  4,  2,  24, 9,  44, 18, 40, 41, 22, 15};
  const SlotSequence s = slot_sequence(StegoKey(0), 48, 48);
  CHECK(s.total_slots == 48);
  CHECK(s.indices == expected);
}

TEST_CASE("distinct, in range, permutation at full count, prefix stable") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::uint64_t> total_dist(1, 5000);
  for (int trial = 0; trial < 200; ++trial) {
    const StegoKey key(rng());
    const std::uint64_t total = total_dist(rng);
    const SlotSequence full = slot_sequence(key, total, total);
    std::vector<std::uint64_t> sorted = full.indices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> identity(total);
    std::iota(identity.begin(), identity.end(), 0);
    REQUIRE(sorted == identity);

    const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(0, total)(rng);
    const SlotSequence part = slot_sequence(key, total, m);
    REQUIRE(std::equal(part.indices.begin(), part.indices.end(), full.indices.begin()));
  }
}

TEST_CASE("dense and sparse strategies agree") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const StegoKey key(rng());
    const std::uint64_t total = std::uniform_int_distribution<std::uint64_t>(1, 3000)(rng);
    const std::uint64_t count = std::uniform_int_distribution<std::uint64_t>(0, total)(rng);
    REQUIRE(detail::slot_sequence_sparse(key, total, count).indices ==
            detail::slot_sequence_dense(key, total, count).indices);
  }
}

TEST_CASE("huge slot spaces take the sparse route") {
  const std::uint64_t total = (std::uint64_t{1} << 40) + 3;
  const SlotSequence s = slot_sequence(StegoKey(5), total, 20000);
  std::set<std::uint64_t> seen(s.indices.begin(), s.indices.end());
  CHECK(seen.size() == 20000);
  CHECK(*seen.rbegin() < total);
  // First draw: nothing swapped yet, so the value is 0 + u mod total.
  CHECK(s.indices[0] == SplitMix64(5).next_u64() % total);
}

TEST_CASE("one-bit seed changes alter the schedule") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t seed = rng();
    const StegoKey a(seed), b(seed ^ (std::uint64_t{1} << (trial % 64)));
    const std::uint64_t total = std::uniform_int_distribution<std::uint64_t>(100, 10000)(rng);
    const std::uint64_t n = std::min<std::uint64_t>(100, total);
    CHECK(slot_sequence(a, total, n).indices != slot_sequence(b, total, n).indices);
  }
}
