#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace agfsync::imaging {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, one byte per pixel
};

// 8-bit grayscale PNG encode/decode (libpng simplified API). Throws
// Error{parse} on malformed input, Error{io} on encoder failure.
std::vector<std::uint8_t> encode_gray_png(const GrayImage& image);
GrayImage decode_gray_png(std::span<const std::uint8_t> bytes);

// Nearest-neighbor resample to size x size, pixels mapped to [0, 1].
// The desk-scale default encoder for DPO batch export.
std::vector<double> flatten_gray(const GrayImage& image, int size);

}  // namespace agfsync::imaging
