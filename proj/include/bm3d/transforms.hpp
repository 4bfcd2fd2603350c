#pragma once

#include <span>
#include <vector>

#include "bm3d/patch.hpp"

namespace bm3d {

enum class Direction { Forward, Inverse };

enum class SpatialTransform { Bior15, Dct };

// Coefficients of a 3D-transformed group: spatial transform applied to
// each patch, then a length-K Walsh-Hadamard transform across patches at
// every spatial position. Layout matches Group3D (member-major).
struct TransformedGroup {
    int k = 0;
    std::vector<PatchRef> refs;
    std::vector<double> coeffs;

    int group_size() const { return static_cast<int>(refs.size()); }
};

// Orthonormal Walsh-Hadamard transform (natural ordering, scaled 1/sqrt(K)
// in each direction, so the matrix is symmetric and involutive). Length
// must be a power of two.
std::vector<double> wht_1d(std::span<const double> v, Direction dir);

// Separable 2D bi-orthogonal 1.5 spline wavelet, full dyadic decomposition
// (log2 k levels) with periodic extension. k must be one of {4, 8, 16}.
// Subbands use the standard nested layout; the single deepest approximation
// coefficient sits at (0,0).
Patch bior15_2d(const Patch& p, Direction dir);

// Orthonormal separable 2D DCT (DCT-II forward, DCT-III inverse). k >= 2.
Patch dct_2d(const Patch& p, Direction dir);

TransformedGroup transform_group(const Group3D& g, SpatialTransform spatial);

Group3D inverse_transform_group(const TransformedGroup& t, SpatialTransform spatial);

}  // namespace bm3d
