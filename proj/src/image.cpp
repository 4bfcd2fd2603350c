#include "bm3d/image.hpp"

#include <stdexcept>

namespace bm3d {

Image mean_image(const std::vector<Image>& images) {
    if (images.empty()) {
        throw std::invalid_argument("mean_image: empty image list");
    }
    const Image& first = images[0];
    for (const Image& img : images) {
        if (!img.same_dims(first)) {
            throw std::invalid_argument("mean_image: images differ in size");
        }
    }
    Image out(first.width, first.height);
    const double inv = 1.0 / static_cast<double>(images.size());
    for (std::size_t i = 0; i < out.pixel_count(); ++i) {
        double sum = 0.0;
        for (const Image& img : images) {
            sum += img.data[i];
        }
        out.data[i] = static_cast<float>(sum * inv);
    }
    return out;
}

Image crop(const Image& img, int row0, int col0, int h, int w) {
    if (row0 < 0 || col0 < 0 || h < 1 || w < 1 || row0 + h > img.height || col0 + w > img.width) {
        throw std::invalid_argument("crop: region outside image");
    }
    Image out(w, h);
    for (int r = 0; r < h; ++r) {
        const float* src = img.row(row0 + r) + col0;
        float* dst = out.row(r);
        for (int c = 0; c < w; ++c) {
            dst[c] = src[c];
        }
    }
    return out;
}

Image center_crop(const Image& img, int h, int w) {
    return crop(img, (img.height - h) / 2, (img.width - w) / 2, h, w);
}

}  // namespace bm3d
