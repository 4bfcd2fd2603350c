#pragma once

#include <span>
#include <vector>

#include "bm3d/image.hpp"

namespace bm3d {

// k x k block of pixel values, row-major doubles.
struct Patch {
    int k = 0;
    std::vector<double> v;

    Patch() = default;
    explicit Patch(int k_) : k(k_), v(static_cast<std::size_t>(k_) * k_, 0.0) {}

    double& at(int row, int col) { return v[static_cast<std::size_t>(row) * k + col]; }
    double at(int row, int col) const { return v[static_cast<std::size_t>(row) * k + col]; }
};

// Location of a k x k patch inside a frame stack.
struct PatchRef {
    int frame = 0;
    int row = 0;
    int col = 0;

    bool operator==(const PatchRef&) const = default;
};

// Ordered stack of K patches; refs[0] is the reference patch. Patch i
// occupies values[i*k*k .. (i+1)*k*k).
struct Group3D {
    int k = 0;
    std::vector<PatchRef> refs;
    std::vector<double> values;

    int group_size() const { return static_cast<int>(refs.size()); }
    double* member(int i) { return values.data() + static_cast<std::size_t>(i) * k * k; }
    const double* member(int i) const { return values.data() + static_cast<std::size_t>(i) * k * k; }
};

Patch extract_patch(const Image& img, int row, int col, int k);

// Gathers the patches at `refs` from `frames` (refs index into frames).
Group3D extract_group(std::span<const Image> frames, std::span<const PatchRef> refs, int k);

}  // namespace bm3d
