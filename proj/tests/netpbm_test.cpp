#include <gtest/gtest.h>

#include <random>
#include <string>

#include "ihsfuse/error.hpp"
#include "ihsfuse/netpbm.hpp"

using namespace ihsfuse;

namespace {

Bytes bytes_of(const std::string& s) { return Bytes(s.begin(), s.end()); }
std::string text_of(const Bytes& b) { return std::string(b.begin(), b.end()); }

Raster random_raster(std::mt19937_64& rng, int bands, int bit_depth) {
  std::uniform_int_distribution<int> dim(1, 7);
  const int w = dim(rng), h = dim(rng);
  std::uniform_int_distribution<int> val(0, (1 << bit_depth) - 1);
  std::vector<Raster::Sample> s(static_cast<std::size_t>(w * h * bands));
  for (auto& v : s) v = static_cast<Raster::Sample>(val(rng));
  return Raster(w, h, bands, bit_depth, std::move(s));
}

}  // namespace

TEST(NetpbmDecodeTest, SmallestGrayscale) {
  const auto r = decode_netpbm(bytes_of("P2 2 1 255 0 255"));
  EXPECT_EQ(r, Raster(2, 1, 1, 8, {0, 255}));
}

TEST(NetpbmDecodeTest, SixBitMaxval) {
  const auto r = decode_netpbm(bytes_of("P2\n1 1\n63\n63\n"));
  EXPECT_EQ(r.bit_depth(), 6);
}

TEST(NetpbmDecodeTest, CommentsInHeader) {
  const auto r = decode_netpbm(bytes_of("P2\n# made by hand\n2 # width\n1\n# max\n15\n3 4\n"));
  EXPECT_EQ(r, Raster(2, 1, 1, 4, {3, 4}));
}

TEST(NetpbmDecodeTest, DeinterleavesColour) {
  const auto r = decode_netpbm(bytes_of("P3 2 1 255 1 2 3 4 5 6"));
  EXPECT_EQ(r.bands(), 3);
  EXPECT_EQ(std::vector<Raster::Sample>(r.samples().begin(), r.samples().end()),
            (std::vector<Raster::Sample>{1, 4, 2, 5, 3, 6}));
}

TEST(NetpbmDecodeTest, SixteenBitBigEndian) {
  Bytes b = bytes_of("P5\n2 1\n65535\n");
  for (int v : {0x01, 0x02, 0xff, 0x00}) b.push_back(static_cast<std::uint8_t>(v));
  const auto r = decode_netpbm(b);
  EXPECT_EQ(r, Raster(2, 1, 1, 16, {0x0102, 0xff00}));
}

TEST(NetpbmDecodeTest, ErrorsNameOffset) {
  try {
    decode_netpbm(bytes_of("P2 2 1 255 0 256"));
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 13u);
  }
  try {
    Bytes b = bytes_of("P5\n2 2\n255\n");
    b.push_back(1);
    decode_netpbm(b);
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
  EXPECT_THROW(decode_netpbm(bytes_of("P4 1 1 1 0")), DecodeError);
  EXPECT_THROW(decode_netpbm(bytes_of("Q2 1 1 1 0")), DecodeError);
  EXPECT_THROW(decode_netpbm(bytes_of("P2 1 1 0 0")), DecodeError);
  EXPECT_THROW(decode_netpbm(bytes_of("P2 1 1 65536 0")), DecodeError);
  EXPECT_THROW(decode_netpbm(bytes_of("P2 0 1 255")), DecodeError);
  EXPECT_THROW(decode_netpbm(bytes_of("P2 2 1 255 7")), DecodeError);
  EXPECT_THROW(decode_netpbm(bytes_of("P2 x 1 255 7")), DecodeError);
  EXPECT_THROW(decode_netpbm(bytes_of("")), DecodeError);
}

TEST(NetpbmEncodeTest, CanonicalPlainGray) {
  EXPECT_EQ(text_of(encode_netpbm(Raster(1, 1, 1, 8, {0}), NetpbmFormat::P2)), "P2\n1 1\n255\n0\n");
}

TEST(NetpbmEncodeTest, BinaryColourIsInterleavedRowMajor) {
  const Raster r(2, 1, 3, 8, {1, 4, 2, 5, 3, 6});
  EXPECT_EQ(text_of(encode_netpbm(r, NetpbmFormat::P6)), std::string("P6\n2 1\n255\n") + "\x01\x02\x03\x04\x05\x06");
  EXPECT_EQ(text_of(encode_netpbm(r, NetpbmFormat::P3)), "P3\n2 1\n255\n1 2 3 4 5 6\n");
}

TEST(NetpbmEncodeTest, BandMismatchIsUsageError) {
  EXPECT_THROW(encode_netpbm(Raster(1, 1, 1, 8, {0}), NetpbmFormat::P6), UsageError);
  EXPECT_THROW(encode_netpbm(Raster(1, 1, 3, 8, {0, 0, 0}), NetpbmFormat::P2), UsageError);
}

TEST(NetpbmEncodeTest, CanonicalizesNonPowerOfTwoMaxval) {
  // maxval 200 decodes to bit depth 8 and re-encodes with maxval 255.
  Bytes in = bytes_of("P5 # comment\n2   1\n200\n");
  in.push_back(7);
  in.push_back(200);
  Bytes canon = bytes_of("P5\n2 1\n255\n");
  canon.push_back(7);
  canon.push_back(200);
  EXPECT_EQ(encode_netpbm(decode_netpbm(in), NetpbmFormat::P5), canon);
}

TEST(NetpbmRoundTripTest, RandomRastersAllFormats) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    for (int depth : {1, 6, 8, 12, 16}) {
      const auto gray = random_raster(rng, 1, depth);
      const auto rgb = random_raster(rng, 3, depth);
      EXPECT_EQ(decode_netpbm(encode_netpbm(gray, NetpbmFormat::P2)), gray);
      EXPECT_EQ(decode_netpbm(encode_netpbm(gray, NetpbmFormat::P5)), gray);
      EXPECT_EQ(decode_netpbm(encode_netpbm(rgb, NetpbmFormat::P3)), rgb);
      EXPECT_EQ(decode_netpbm(encode_netpbm(rgb, NetpbmFormat::P6)), rgb);
      const auto p5 = encode_netpbm(gray, NetpbmFormat::P5);
      EXPECT_EQ(encode_netpbm(decode_netpbm(p5), NetpbmFormat::P5), p5);
    }
  }
}

TEST(NetpbmFormatTest, ParseAndDefault) {
  EXPECT_EQ(parse_netpbm_format("P6"), NetpbmFormat::P6);
  EXPECT_THROW(parse_netpbm_format("P7"), UsageError);
  EXPECT_EQ(binary_format_for(Raster(1, 1, 1, 8, {0})), NetpbmFormat::P5);
  EXPECT_EQ(binary_format_for(Raster(1, 1, 3, 8, {0, 0, 0})), NetpbmFormat::P6);
}
