#include "cryptsteg/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "cryptsteg/error.hpp"

namespace cryptsteg {
namespace {

constexpr std::size_t kMinTestBits = 100;

void require_bits(const BitSequence& bits) {
  if (bits.size() < kMinTestBits) {
    throw Error(ErrorCode::TooFewBits,
                "randomness tests need at least 100 bits, got " + std::to_string(bits.size()));
  }
}

std::string fixed(double v, int digits) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

DistortionReport distortion(const ImageBuffer& cover, const ImageBuffer& stego) {
  if (!cover.same_shape(stego)) {
    throw Error(ErrorCode::ShapeMismatch, "images differ in size or channel count");
  }
  DistortionReport r;
  r.sample_count = cover.sample_count();
  const auto a = cover.samples();
  const auto b = stego.samples();
  std::uint64_t squared = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = int{a[i]} - int{b[i]};
    squared += static_cast<std::uint64_t>(d * d);
    const unsigned diff = a[i] ^ b[i];
    if (diff == 0) continue;
    ++r.changed_bytes;
    for (int plane = 0; plane < 8; ++plane) r.changed_bits_per_plane[plane] += (diff >> plane) & 1u;
  }
  r.mse = static_cast<double>(squared) / static_cast<double>(r.sample_count);
  r.psnr_db = squared == 0 ? std::numeric_limits<double>::infinity()
                           : 10.0 * std::log10(kPeakSample * kPeakSample / r.mse);
  return r;
}

double monobit_test(const BitSequence& bits) {
  require_bits(bits);
  const double n = static_cast<double>(bits.size());
  const double ones = static_cast<double>(bits.count_ones());
  return (ones - n / 2.0) / std::sqrt(n / 4.0);
}

double runs_test(const BitSequence& bits) {
  require_bits(bits);
  const double n = static_cast<double>(bits.size());
  const double p = static_cast<double>(bits.count_ones()) / n;
  if (!(p > 0.4 && p < 0.6)) {
    throw Error(ErrorCode::PrerequisiteFailed,
                "runs test needs a ones fraction inside (0.4, 0.6), got " + fixed(p, 6));
  }
  double runs = 1.0;
  for (std::size_t i = 1; i < bits.size(); ++i) runs += (bits[i] != bits[i - 1]);
  const double m = 2.0 * n * p * (1.0 - p);
  const double expected = m + 1.0;
  const double variance = m * (m - 1.0) / (n - 1.0);
  return (runs - expected) / std::sqrt(variance);
}

RandomnessReport randomness_report(const BitSequence& bits) {
  RandomnessReport r;
  r.monobit_z = monobit_test(bits);
  r.n_bits = bits.size();
  r.ones = bits.count_ones();
  r.ones_fraction = static_cast<double>(r.ones) / static_cast<double>(r.n_bits);
  try {
    r.runs_z = runs_test(bits);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PrerequisiteFailed) throw;
  }
  return r;
}

std::string to_key_value(const DistortionReport& r) {
  std::string out;
  out += "samples=" + std::to_string(r.sample_count) + "\n";
  out += "mse=" + fixed(r.mse, 6) + "\n";
  out += "psnr_db=" + fixed(r.psnr_db, 4) + "\n";
  out += "changed_bytes=" + std::to_string(r.changed_bytes) + "\n";
  for (int plane = 0; plane < 8; ++plane) {
    out += "changed_bits_plane" + std::to_string(plane) + "=" +
           std::to_string(r.changed_bits_per_plane[plane]) + "\n";
  }
  return out;
}

std::string to_key_value(const RandomnessReport& r) {
  std::string out;
  out += "n_bits=" + std::to_string(r.n_bits) + "\n";
  out += "ones=" + std::to_string(r.ones) + "\n";
  out += "ones_fraction=" + fixed(r.ones_fraction, 6) + "\n";
  out += "monobit_z=" + fixed(r.monobit_z, 4) + "\n";
  out += "runs_z=" + (r.runs_z ? fixed(*r.runs_z, 4) : std::string("n/a")) + "\n";
  return out;
}

std::string to_json(const DistortionReport& r) {
  nlohmann::json j;
  j["samples"] = r.sample_count;
  j["mse"] = r.mse;
  if (std::isinf(r.psnr_db)) {
    j["psnr_db"] = "inf";
  } else {
    j["psnr_db"] = r.psnr_db;
  }
  j["changed_bytes"] = r.changed_bytes;
  j["changed_bits_per_plane"] = r.changed_bits_per_plane;
  return j.dump();
}

std::string to_json(const RandomnessReport& r) {
  nlohmann::json j;
  j["n_bits"] = r.n_bits;
  j["ones"] = r.ones;
  j["ones_fraction"] = r.ones_fraction;
  j["monobit_z"] = r.monobit_z;
  j["runs_z"] = r.runs_z ? nlohmann::json(*r.runs_z) : nlohmann::json(nullptr);
  return j.dump();
}

}  // namespace cryptsteg
