#include <doctest.h>

#include <fstream>
#include <iterator>
#include <random>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "cryptsteg/error.hpp"
#include "cryptsteg/image.hpp"
#include "test_support.hpp"

using namespace cryptsteg;
using testing::data_path;

namespace {

const std::vector<std::uint8_t> kRgb2x2{255, 0, 0, 0, 255, 0, 0, 0, 255, 12, 34, 56};
const std::vector<std::uint8_t> kGray2x2{0, 64, 128, 255};

ErrorCode load_error(const std::filesystem::path& p) {
  try {
    load_image(p);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("load_image did not throw for " << p);
  return ErrorCode::IoError;
}

std::vector<std::uint8_t> file_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& p, const std::vector<std::uint8_t>& data) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

// Decodes with OpenCV and reorders to R,G,B so it is comparable with ImageBuffer.
std::vector<std::uint8_t> opencv_samples(const std::filesystem::path& p, int& channels) {
  cv::Mat m = cv::imread(p.string(), cv::IMREAD_UNCHANGED);
  REQUIRE(!m.empty());
  REQUIRE(m.depth() == CV_8U);
  channels = m.channels();
  std::vector<std::uint8_t> out;
  for (int y = 0; y < m.rows; ++y) {
    const std::uint8_t* row = m.ptr<std::uint8_t>(y);
    for (int x = 0; x < m.cols; ++x) {
      if (channels == 1) {
        out.push_back(row[x]);
      } else {
        out.push_back(row[x * 3 + 2]);
        out.push_back(row[x * 3 + 1]);
        out.push_back(row[x * 3 + 0]);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ImageBuffer invariants") {
  CHECK_THROWS_AS(ImageBuffer(0, 1, 1), Error);
  CHECK_THROWS_AS(ImageBuffer(1, 1, 2), Error);
  CHECK_THROWS_AS(ImageBuffer(1, 1, 4), Error);
  CHECK_THROWS_AS(ImageBuffer(2, 2, 3, std::vector<std::uint8_t>(11)), Error);
  const ImageBuffer ok(3, 2, 3);
  CHECK(ok.sample_count() == 18);
}

TEST_SUITE("load_image") {
  TEST_CASE("8-bit RGB PNG") {
    const ImageBuffer img = load_image(data_path("rgb_2x2.png"));
    CHECK(img.width() == 2);
    CHECK(img.height() == 2);
    CHECK(img.channels() == 3);
    CHECK(std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()) == kRgb2x2);

    int channels = 0;
    CHECK(opencv_samples(data_path("rgb_2x2.png"), channels) == kRgb2x2);
  }

  TEST_CASE("Gray PNG and BMP stay single channel") {
    for (const char* name : {"gray_2x2.png", "gray_2x2.bmp"}) {
      INFO(name);
      const ImageBuffer img = load_image(data_path(name));
      CHECK(img.channels() == 1);
      CHECK(std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()) == kGray2x2);
    }
  }

  TEST_CASE("24-bit BMP") {
    const ImageBuffer img = load_image(data_path("rgb_2x2.bmp"));
    CHECK(img.channels() == 3);
    CHECK(std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()) == kRgb2x2);
  }

  TEST_CASE("BMP row padding") {
    // Pixel values as decoded by Pillow when the fixture was written.
    const std::vector<std::uint8_t> expected{
        11,  180, 219, 113, 190, 87,  34,  9,   133, 29,  61,  36,  244, 192, 207,
        131, 254, 67,  99,  248, 47,  71,  89,  119, 137, 85,  246, 206, 214, 129,
        203, 234, 113, 121, 206, 210, 200, 248, 20,  161, 52,  114, 255, 112, 206};
    const ImageBuffer img = load_image(data_path("noise_5x3.bmp"));
    CHECK(img.width() == 5);
    CHECK(img.height() == 3);
    CHECK(std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()) == expected);
  }

  TEST_CASE("top-down 32-bit BMP drops alpha") {
    // 2x1, BI_RGB, negative height; pixels stored B,G,R,A.
    std::vector<std::uint8_t> bmp{'B', 'M', 62, 0, 0, 0, 0, 0, 0, 0, 54, 0, 0, 0,
                                  40,  0,   0,  0, 2, 0, 0, 0, 0xFF, 0xFF, 0xFF, 0xFF,
                                  1,   0,   32, 0, 0, 0, 0, 0, 8, 0, 0, 0,
                                  0,   0,   0,  0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                  3,   2,   1,  9, 6, 5, 4, 9};
    testing::TempDir dir;
    write_bytes(dir / "td.bmp", bmp);
    LoadNotes notes;
    const ImageBuffer img = load_image(dir / "td.bmp", &notes);
    CHECK(notes.alpha_stripped);
    CHECK(img.width() == 2);
    CHECK(img.height() == 1);
    CHECK(std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()) ==
          std::vector<std::uint8_t>{1, 2, 3, 4, 5, 6});
  }

  TEST_CASE("alpha is stripped") {
    LoadNotes notes;
    const ImageBuffer img = load_image(data_path("rgba_2x2.png"), &notes);
    CHECK(notes.alpha_stripped);
    CHECK_FALSE(notes.palette_expanded);
    CHECK(img.channels() == 3);
    CHECK(std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()) == kRgb2x2);
  }

  TEST_CASE("palette is expanded") {
    LoadNotes notes;
    const ImageBuffer img = load_image(data_path("palette_2x2.png"), &notes);
    CHECK(notes.palette_expanded);
    CHECK(img.channels() == 3);
    CHECK(std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()) == kRgb2x2);
  }

  TEST_CASE("rejected inputs") {
    CHECK(load_error(data_path("gray16_2x2.png")) == ErrorCode::UnsupportedDepth);
    CHECK(load_error(data_path("noise_8x8.jpg")) == ErrorCode::UnsupportedFormat);
    CHECK(load_error(data_path("does_not_exist.png")) == ErrorCode::IoError);

    testing::TempDir dir;
    write_bytes(dir / "text.png", {'h', 'e', 'l', 'l', 'o'});
    CHECK(load_error(dir / "text.png") == ErrorCode::UnsupportedFormat);

    auto png = file_bytes(data_path("rgb_2x2.png"));
    png.resize(png.size() / 2);
    write_bytes(dir / "truncated.png", png);
    CHECK(load_error(dir / "truncated.png") == ErrorCode::DecodeError);

    auto bmp = file_bytes(data_path("noise_5x3.bmp"));
    bmp.resize(bmp.size() - 10);
    write_bytes(dir / "truncated.bmp", bmp);
    CHECK(load_error(dir / "truncated.bmp") == ErrorCode::DecodeError);
  }
}

TEST_SUITE("save_image") {
  TEST_CASE("1x1 gray") {
    testing::TempDir dir;
    save_image(ImageBuffer(1, 1, 1, {42}), dir / "one.png");
    const ImageBuffer back = load_image(dir / "one.png");
    CHECK(back.channels() == 1);
    CHECK(back.samples()[0] == 42);
  }

  TEST_CASE("lossless round-trip and stable re-encode") {
    std::mt19937_64 rng(8);
    testing::TempDir dir;
    for (int trial = 0; trial < 20; ++trial) {
      const auto w = static_cast<std::uint32_t>(1 + rng() % 70);
      const auto h = static_cast<std::uint32_t>(1 + rng() % 70);
      const std::uint32_t c = (trial % 2) ? 3 : 1;
      const ImageBuffer img = testing::random_image(rng, w, h, c);
      save_image(img, dir / "a.png");
      const ImageBuffer back = load_image(dir / "a.png");
      REQUIRE(back == img);
      save_image(back, dir / "b.png");
      REQUIRE(file_bytes(dir / "a.png") == file_bytes(dir / "b.png"));
    }
  }

  TEST_CASE("512x512 RGB reads back identically in OpenCV") {
    std::mt19937_64 rng(9);
    const ImageBuffer img = testing::random_image(rng, 512, 512, 3);
    testing::TempDir dir;
    save_image(img, dir / "big.bmp");  // extension is ignored; output is PNG
    const auto head = file_bytes(dir / "big.bmp");
    REQUIRE(head.size() > 8);
    CHECK(head[1] == 'P');
    int channels = 0;
    const auto cv = opencv_samples(dir / "big.bmp", channels);
    CHECK(channels == 3);
    CHECK(cv == std::vector<std::uint8_t>(img.samples().begin(), img.samples().end()));
  }

  TEST_CASE("unwritable path") {
    try {
      save_image(ImageBuffer(1, 1, 1), "/nonexistent-dir/x.png");
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IoError);
    }
  }
}
