#include "bm3d/patch.hpp"

#include <stdexcept>

namespace bm3d {

Patch extract_patch(const Image& img, int row, int col, int k) {
    if (k < 1 || row < 0 || col < 0 || row + k > img.height || col + k > img.width) {
        throw std::invalid_argument("extract_patch: patch outside image");
    }
    Patch p(k);
    for (int r = 0; r < k; ++r) {
        const float* src = img.row(row + r) + col;
        for (int c = 0; c < k; ++c) {
            p.v[static_cast<std::size_t>(r) * k + c] = src[c];
        }
    }
    return p;
}

Group3D extract_group(std::span<const Image> frames, std::span<const PatchRef> refs, int k) {
    Group3D g;
    g.k = k;
    g.refs.assign(refs.begin(), refs.end());
    g.values.resize(refs.size() * static_cast<std::size_t>(k) * k);
    double* dst = g.values.data();
    for (const PatchRef& ref : refs) {
        if (ref.frame < 0 || ref.frame >= static_cast<int>(frames.size())) {
            throw std::invalid_argument("extract_group: frame index out of range");
        }
        const Image& img = frames[ref.frame];
        if (ref.row < 0 || ref.col < 0 || ref.row + k > img.height || ref.col + k > img.width) {
            throw std::invalid_argument("extract_group: patch outside frame");
        }
        for (int r = 0; r < k; ++r) {
            const float* src = img.row(ref.row + r) + ref.col;
            for (int c = 0; c < k; ++c) {
                *dst++ = src[c];
            }
        }
    }
    return g;
}

}  // namespace bm3d
