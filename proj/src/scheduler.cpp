#include "cryptsteg/scheduler.hpp"

#include <charconv>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "cryptsteg/error.hpp"

namespace cryptsteg {
namespace {

// Above this many slots the virtual identity array is kept as a sparse map.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

template <typename Swap>
SlotSequence run_shuffle(StegoKey key, std::uint64_t total, std::uint64_t count, Swap&& swap_emit) {
  SlotSequence out;
  out.total_slots = total;
  out.indices.reserve(static_cast<std::size_t>(count));
  SplitMix64 gen(key.seed());
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + gen.next_u64() % (total - i);
    out.indices.push_back(swap_emit(i, j));
  }
  return out;
}

}  // namespace

StegoKey StegoKey::parse(std::string_view text) {
  if (text.empty() || text.size() > 16) {
    throw Error(ErrorCode::InvalidKey, "stego-key must be 1 to 16 lowercase hex digits");
  }
  for (char c : text) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) throw Error(ErrorCode::InvalidKey, "stego-key must be 1 to 16 lowercase hex digits");
  }
  std::uint64_t seed = 0;
  std::from_chars(text.data(), text.data() + text.size(), seed, 16);
  return StegoKey(seed);
}

std::string StegoKey::to_string() const {
  char buf[16];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, seed_, 16);
  return std::string(buf, ptr);
}

namespace detail {

SlotSequence slot_sequence_dense(StegoKey key, std::uint64_t total_slots, std::uint64_t count) {
  std::vector<std::uint64_t> perm(static_cast<std::size_t>(total_slots));
  std::iota(perm.begin(), perm.end(), std::uint64_t{0});
  return run_shuffle(key, total_slots, count, [&](std::uint64_t i, std::uint64_t j) {
    std::swap(perm[i], perm[j]);
    return perm[i];
  });
}

SlotSequence slot_sequence_sparse(StegoKey key, std::uint64_t total_slots, std::uint64_t count) {
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  moved.reserve(static_cast<std::size_t>(count) * 2);
  auto at = [&](std::uint64_t p) {
    auto it = moved.find(p);
    return it == moved.end() ? p : it->second;
  };
  return run_shuffle(key, total_slots, count, [&](std::uint64_t i, std::uint64_t j) {
    const std::uint64_t vi = at(i);
    const std::uint64_t vj = at(j);
    moved[j] = vi;
    moved[i] = vj;
    return vj;
  });
}

}  // namespace detail

SlotSequence slot_sequence(StegoKey key, std::uint64_t total_slots, std::uint64_t count) {
  if (count > total_slots) {
    throw Error(ErrorCode::CapacityExceeded,
                "requested " + std::to_string(count) + " slots but only " +
                    std::to_string(total_slots) + " exist");
  }
  if (count == 0) return {{}, total_slots};
  if (total_slots <= kDenseLimit) return detail::slot_sequence_dense(key, total_slots, count);
  return detail::slot_sequence_sparse(key, total_slots, count);
}

}  // namespace cryptsteg
