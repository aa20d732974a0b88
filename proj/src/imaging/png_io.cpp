#include "agfsync/imaging/png_io.hpp"

#include <png.h>

#include <cstring>

#include "agfsync/core/error.hpp"

namespace agfsync::imaging {

std::vector<std::uint8_t> encode_gray_png(const GrayImage& image) {
    if (image.width <= 0 || image.height <= 0 ||
        image.pixels.size() != std::size_t(image.width) * std::size_t(image.height)) {
        raise(ErrorKind::precondition, "gray image dimensions inconsistent");
    }

    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    png.width = png_uint_32(image.width);
    png.height = png_uint_32(image.height);
    png.format = PNG_FORMAT_GRAY;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&png, nullptr, &size, 0, image.pixels.data(), 0, nullptr)) {
        raise(ErrorKind::io, std::string("png size probe failed: ") + png.message);
    }
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&png, out.data(), &size, 0, image.pixels.data(), 0, nullptr)) {
        raise(ErrorKind::io, std::string("png encode failed: ") + png.message);
    }
    out.resize(size);
    return out;
}

GrayImage decode_gray_png(std::span<const std::uint8_t> bytes) {
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
        raise(ErrorKind::parse, std::string("png decode failed: ") + png.message);
    }
    png.format = PNG_FORMAT_GRAY;

    GrayImage image;
    image.width = int(png.width);
    image.height = int(png.height);
    image.pixels.resize(PNG_IMAGE_SIZE(png));
    if (!png_image_finish_read(&png, nullptr, image.pixels.data(), 0, nullptr)) {
        raise(ErrorKind::parse, std::string("png read failed: ") + png.message);
    }
    return image;
}

std::vector<double> flatten_gray(const GrayImage& image, int size) {
    if (size <= 0) raise(ErrorKind::precondition, "flatten size must be positive");
    if (image.width <= 0 || image.height <= 0) {
        raise(ErrorKind::precondition, "cannot flatten empty image");
    }
    std::vector<double> out(std::size_t(size) * std::size_t(size));
    for (int y = 0; y < size; ++y) {
        int src_y = y * image.height / size;
        for (int x = 0; x < size; ++x) {
            int src_x = x * image.width / size;
            std::uint8_t p = image.pixels[std::size_t(src_y) * std::size_t(image.width) + std::size_t(src_x)];
            out[std::size_t(y) * std::size_t(size) + std::size_t(x)] = double(p) / 255.0;
        }
    }
    return out;
}

}  // namespace agfsync::imaging
