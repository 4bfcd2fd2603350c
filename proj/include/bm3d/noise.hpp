#pragma once

#include <cstdint>
#include <string>

#include "bm3d/image.hpp"

namespace bm3d {

// Sub-seed for frame `index`: the index-th output of a SplitMix64 stream
// seeded with `seed`. Fixed so that datasets are reproducible bit-for-bit.
std::uint64_t subseed(std::uint64_t seed, std::uint64_t index);

// Adds iid Gaussian noise N(0, sigma^2) to every pixel. The generator is
// MT19937-64 seeded with spec.seed; normal deviates come from the
// Box-Muller transform on 53-bit uniforms. Output is not clamped.
Image add_awgn(const Image& img, const NoiseSpec& spec);

// L independent noisy realizations of `clean`; frame i uses
// subseed(seed, i) so realizations are independent across frames.
FrameStack make_dataset(const Image& clean, double sigma, int frame_count, std::uint64_t seed,
                        std::string source_id = {});

}  // namespace bm3d
