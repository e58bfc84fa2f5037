#include "cryptsteg/image.hpp"

#include <png.h>

#include <array>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>

#include "cryptsteg/error.hpp"

namespace cryptsteg {

ImageBuffer::ImageBuffer(std::uint32_t width, std::uint32_t height, std::uint32_t channels)
    : ImageBuffer(width, height, channels,
                  std::vector<std::uint8_t>(std::size_t{width} * height * channels, 0)) {}

ImageBuffer::ImageBuffer(std::uint32_t width, std::uint32_t height, std::uint32_t channels,
                         std::vector<std::uint8_t> samples)
    : width_(width), height_(height), channels_(channels), samples_(std::move(samples)) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::InvalidParameter, "image dimensions must be positive");
  }
  if (channels != 1 && channels != 3) {
    throw Error(ErrorCode::InvalidParameter, "image must have 1 or 3 channels");
  }
  if (samples_.size() != std::size_t{width} * height * channels) {
    throw Error(ErrorCode::InvalidParameter, "sample count does not match image dimensions");
  }
}

namespace {

using FilePtr = std::unique_ptr<std::FILE, decltype(&std::fclose)>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  return FilePtr(std::fopen(path.c_str(), mode), &std::fclose);
}

enum class Container { Png, Bmp, Lossy, Unknown };

Container sniff(std::span<const std::uint8_t> head) {
  static constexpr std::array<std::uint8_t, 8> kPng{0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  auto starts = [&](std::initializer_list<std::uint8_t> magic) {
    return head.size() >= magic.size() && std::equal(magic.begin(), magic.end(), head.begin());
  };
  if (head.size() >= kPng.size() && std::equal(kPng.begin(), kPng.end(), head.begin())) {
    return Container::Png;
  }
  if (starts({'B', 'M'})) return Container::Bmp;
  if (starts({0xFF, 0xD8, 0xFF})) return Container::Lossy;                 // JPEG
  if (starts({'G', 'I', 'F', '8'})) return Container::Lossy;               // GIF
  if (starts({'I', 'I', 42, 0}) || starts({'M', 'M', 0, 42})) return Container::Lossy;  // TIFF
  if (head.size() >= 12 && starts({'R', 'I', 'F', 'F'}) &&
      std::memcmp(head.data() + 8, "WEBP", 4) == 0) {
    return Container::Lossy;
  }
  return Container::Unknown;
}

// ---- PNG -------------------------------------------------------------------

// libpng reports errors through longjmp. Everything with a destructor lives in
// the caller's frame; the frames below setjmp hold only trivial locals.
struct PngReadResult {
  int status = 0;  // 0 ok, 1 libpng error, 2 unsupported depth
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int channels = 0;
  bool alpha_stripped = false;
  bool palette_expanded = false;
  char message[128] = {};
};

void png_error_to_jmp(png_structp png, png_const_charp msg) {
  auto* result = static_cast<PngReadResult*>(png_get_error_ptr(png));
  std::snprintf(result->message, sizeof result->message, "%s", msg);
  png_longjmp(png, 1);
}

void png_silent_warning(png_structp, png_const_charp) {}

void read_png_rows(std::FILE* fp, PngReadResult& result, std::vector<std::uint8_t>& samples,
                   std::vector<png_bytep>& rows) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &result, png_error_to_jmp,
                                           png_silent_warning);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(png ? &png : nullptr, nullptr, nullptr);
    result.status = 1;
    std::snprintf(result.message, sizeof result.message, "out of memory");
    return;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    result.status = 1;
    return;
  }
  png_init_io(png, fp);
  png_read_info(png, info);

  const int depth = png_get_bit_depth(png, info);
  const int color = png_get_color_type(png, info);
  if (depth == 16 || (depth < 8 && color != PNG_COLOR_TYPE_PALETTE)) {
    png_destroy_read_struct(&png, &info, nullptr);
    result.status = 2;
    std::snprintf(result.message, sizeof result.message, "%d-bit samples", depth);
    return;
  }
  if (color == PNG_COLOR_TYPE_PALETTE) {
    png_set_palette_to_rgb(png);
    result.palette_expanded = true;
  }
  // Palette expansion turns a tRNS chunk into an alpha channel; drop it too.
  const bool palette_alpha =
      color == PNG_COLOR_TYPE_PALETTE && png_get_valid(png, info, PNG_INFO_tRNS);
  if ((color & PNG_COLOR_MASK_ALPHA) || palette_alpha) {
    png_set_strip_alpha(png);
    result.alpha_stripped = true;
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  result.width = png_get_image_width(png, info);
  result.height = png_get_image_height(png, info);
  result.channels = png_get_channels(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);
  if (result.channels != 1 && result.channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    result.status = 1;
    std::snprintf(result.message, sizeof result.message, "unexpected channel count %d",
                  result.channels);
    return;
  }
  samples.resize(stride * result.height);
  rows.resize(result.height);
  for (png_uint_32 y = 0; y < result.height; ++y) rows[y] = samples.data() + y * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
}

ImageBuffer load_png(const std::filesystem::path& path, LoadNotes* notes) {
  FilePtr fp = open_file(path, "rb");
  if (!fp) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  PngReadResult result;
  std::vector<std::uint8_t> samples;
  std::vector<png_bytep> rows;
  read_png_rows(fp.get(), result, samples, rows);
  if (result.status == 2) {
    throw Error(ErrorCode::UnsupportedDepth,
                path.string() + ": only 8-bit samples are supported (" + result.message + ")");
  }
  if (result.status != 0) {
    throw Error(ErrorCode::DecodeError, path.string() + ": " + result.message);
  }
  if (notes) {
    notes->alpha_stripped = result.alpha_stripped;
    notes->palette_expanded = result.palette_expanded;
  }
  return ImageBuffer(result.width, result.height, static_cast<std::uint32_t>(result.channels),
                     std::move(samples));
}

struct PngWriteState {
  char message[128] = {};
};

void png_write_error(png_structp png, png_const_charp msg) {
  auto* st = static_cast<PngWriteState*>(png_get_error_ptr(png));
  std::snprintf(st->message, sizeof st->message, "%s", msg);
  png_longjmp(png, 1);
}

bool write_png_rows(std::FILE* fp, const ImageBuffer& img, std::vector<png_bytep>& rows,
                    PngWriteState& st) {
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, &st, png_write_error, png_silent_warning);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(png ? &png : nullptr, nullptr);
    std::snprintf(st.message, sizeof st.message, "out of memory");
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, img.width(), img.height(), 8,
               img.channels() == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

// ---- BMP -------------------------------------------------------------------

std::uint32_t le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
         std::uint32_t{p[3]} << 24;
}
std::uint16_t le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

ImageBuffer decode_bmp(std::span<const std::uint8_t> file, const std::string& name,
                       LoadNotes* notes) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::DecodeError, name + ": " + why);
  };
  if (file.size() < 54) throw fail("truncated BMP header");
  const std::uint32_t pixel_offset = le32(&file[10]);
  const std::uint32_t header_size = le32(&file[14]);
  if (header_size < 40) throw fail("unsupported BMP header version");
  const auto width = static_cast<std::int32_t>(le32(&file[18]));
  const auto raw_height = static_cast<std::int32_t>(le32(&file[22]));
  const std::uint16_t planes = le16(&file[26]);
  const std::uint16_t bpp = le16(&file[28]);
  const std::uint32_t compression = le32(&file[30]);
  std::uint32_t palette_size = le32(&file[46]);

  if (planes != 1 || width <= 0 || raw_height == 0 || raw_height == INT32_MIN) {
    throw fail("invalid BMP dimensions");
  }
  if (bpp != 8 && bpp != 24 && bpp != 32) {
    throw Error(ErrorCode::UnsupportedDepth,
                name + ": BMP with " + std::to_string(bpp) + " bits per pixel");
  }
  if (compression != 0) {
    throw Error(ErrorCode::UnsupportedFormat, name + ": compressed BMP");
  }
  const bool top_down = raw_height < 0;
  const auto w = static_cast<std::uint32_t>(width);
  const auto h = static_cast<std::uint32_t>(top_down ? -raw_height : raw_height);
  const std::size_t stride = ((std::size_t{w} * bpp + 31) / 32) * 4;
  if (pixel_offset > file.size() || file.size() - pixel_offset < stride * h) {
    throw fail("truncated BMP pixel data");
  }

  // Palette entries are stored B,G,R,reserved after the info header.
  std::vector<std::array<std::uint8_t, 3>> palette;
  bool gray_palette = true;
  if (bpp == 8) {
    if (palette_size == 0) palette_size = 256;
    const std::size_t palette_at = 14 + std::size_t{header_size};
    if (palette_size > 256 || palette_at + palette_size * 4 > pixel_offset) {
      throw fail("invalid BMP palette");
    }
    for (std::uint32_t i = 0; i < palette_size; ++i) {
      const std::uint8_t* e = &file[palette_at + i * 4];
      palette.push_back({e[2], e[1], e[0]});
      gray_palette = gray_palette && e[0] == i && e[1] == i && e[2] == i;
    }
  }

  const std::uint32_t channels = (bpp == 8 && gray_palette) ? 1 : 3;
  ImageBuffer img(w, h, channels);
  auto out = img.samples();
  for (std::uint32_t y = 0; y < h; ++y) {
    const std::uint32_t src_row = top_down ? y : h - 1 - y;
    const std::uint8_t* row = &file[pixel_offset + src_row * stride];
    std::uint8_t* dst = &out[std::size_t{y} * w * channels];
    for (std::uint32_t x = 0; x < w; ++x) {
      if (bpp == 8) {
        const std::uint8_t idx = row[x];
        if (idx >= palette.size()) throw fail("palette index out of range");
        if (channels == 1) {
          dst[x] = idx;
        } else {
          std::copy(palette[idx].begin(), palette[idx].end(), dst + x * 3);
        }
      } else {
        const std::uint8_t* px = row + std::size_t{x} * (bpp / 8);
        dst[x * 3 + 0] = px[2];
        dst[x * 3 + 1] = px[1];
        dst[x * 3 + 2] = px[0];
      }
    }
  }
  if (notes) {
    notes->alpha_stripped = (bpp == 32);
    notes->palette_expanded = (bpp == 8 && !gray_palette);
  }
  return img;
}

std::vector<std::uint8_t> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

ImageBuffer load_image(const std::filesystem::path& path, LoadNotes* notes) {
  if (notes) *notes = {};
  std::array<std::uint8_t, 12> head{};
  std::size_t got = 0;
  {
    FilePtr fp = open_file(path, "rb");
    if (!fp) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    got = std::fread(head.data(), 1, head.size(), fp.get());
  }
  switch (sniff(std::span(head).first(got))) {
    case Container::Png:
      return load_png(path, notes);
    case Container::Bmp:
      return decode_bmp(read_all(path), path.string(), notes);
    case Container::Lossy:
      throw Error(ErrorCode::UnsupportedFormat,
                  path.string() + ": lossy or unsupported container; use PNG or BMP");
    case Container::Unknown:
      break;
  }
  throw Error(ErrorCode::UnsupportedFormat, path.string() + ": not a PNG or BMP file");
}

void save_image(const ImageBuffer& img, const std::filesystem::path& path) {
  FilePtr fp = open_file(path, "wb");
  if (!fp) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  const std::size_t stride = std::size_t{img.width()} * img.channels();
  std::vector<png_bytep> rows(img.height());
  // libpng takes non-const row pointers but only reads them when writing.
  auto* base = const_cast<std::uint8_t*>(img.samples().data());
  for (std::uint32_t y = 0; y < img.height(); ++y) rows[y] = base + y * stride;
  PngWriteState st;
  if (!write_png_rows(fp.get(), img, rows, st)) {
    throw Error(ErrorCode::IoError, path.string() + ": " + st.message);
  }
  if (std::fflush(fp.get()) != 0) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

}  // namespace cryptsteg
