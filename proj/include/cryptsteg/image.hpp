#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace cryptsteg {

/// 8-bit raster, row-major and channel-interleaved (R,G,B for colour).
/// channels is 1 (Gray) or 3 (RGB); samples.size() == width * height * channels.
class ImageBuffer {
 public:
  ImageBuffer(std::uint32_t width, std::uint32_t height, std::uint32_t channels);
  ImageBuffer(std::uint32_t width, std::uint32_t height, std::uint32_t channels,
              std::vector<std::uint8_t> samples);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::uint32_t channels() const noexcept { return channels_; }
  std::size_t sample_count() const noexcept { return samples_.size(); }

  std::span<const std::uint8_t> samples() const noexcept { return samples_; }
  std::span<std::uint8_t> samples() noexcept { return samples_; }

  bool same_shape(const ImageBuffer& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
  }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::uint32_t channels_;
  std::vector<std::uint8_t> samples_;
};

/// Conversions applied while loading, so callers can warn about them.
struct LoadNotes {
  bool alpha_stripped = false;
  bool palette_expanded = false;
};

/// Reads PNG or BMP without any colour management. JPEG, GIF, WebP and TIFF
/// raise UnsupportedFormat; 16-bit or sub-byte grey samples raise
/// UnsupportedDepth; truncated or corrupt files raise DecodeError.
/// Alpha is dropped and palettes are expanded to RGB.
ImageBuffer load_image(const std::filesystem::path& path, LoadNotes* notes = nullptr);

/// Always writes an 8-bit, non-interlaced PNG regardless of the extension.
void save_image(const ImageBuffer& img, const std::filesystem::path& path);

}  // namespace cryptsteg
