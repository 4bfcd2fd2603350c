#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bm3d {

// Grayscale image with row-major float intensities. Nominal range is
// [0,255] but values are never clamped; noisy data may lie well outside.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    Image() = default;
    Image(int width_, int height_, float fill = 0.0f)
        : width(width_), height(height_), data(static_cast<std::size_t>(width_) * height_, fill) {}

    float& at(int row, int col) { return data[static_cast<std::size_t>(row) * width + col]; }
    float at(int row, int col) const { return data[static_cast<std::size_t>(row) * width + col]; }

    const float* row(int r) const { return data.data() + static_cast<std::size_t>(r) * width; }
    float* row(int r) { return data.data() + static_cast<std::size_t>(r) * width; }

    std::size_t pixel_count() const { return data.size(); }
    bool same_dims(const Image& other) const {
        return width == other.width && height == other.height;
    }
};

struct NoiseSpec {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

// L pre-registered noisy observations of one scene plus noise metadata.
struct FrameStack {
    std::vector<Image> frames;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::string source_id;

    int frame_count() const { return static_cast<int>(frames.size()); }
};

// Pixelwise mean of equally sized images. Throws on empty input or
// dimension mismatch.
Image mean_image(const std::vector<Image>& images);

// Copies the h x w region whose top-left corner is (row0, col0).
Image crop(const Image& img, int row0, int col0, int h, int w);

// Central h x w crop.
Image center_crop(const Image& img, int h, int w);

}  // namespace bm3d
