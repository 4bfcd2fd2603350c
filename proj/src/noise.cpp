#include "bm3d/noise.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace bm3d {

namespace {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// 53-bit uniform in [0,1).
double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    std::uint64_t out = splitmix64_next(state);
    for (std::uint64_t i = 0; i < index; ++i) {
        out = splitmix64_next(state);
    }
    return out;
}

Image add_awgn(const Image& img, const NoiseSpec& spec) {
    if (spec.sigma <= 0.0) {
        throw std::invalid_argument("add_awgn: sigma must be > 0");
    }
    std::mt19937_64 rng(spec.seed);
    Image out(img.width, img.height);
    const std::size_t n = img.pixel_count();
    std::size_t i = 0;
    while (i < n) {
        // Box-Muller pair; u1 shifted into (0,1] so the log is finite.
        const double u1 = 1.0 - uniform53(rng);
        const double u2 = uniform53(rng);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        out.data[i] = static_cast<float>(img.data[i] + spec.sigma * radius * std::cos(angle));
        ++i;
        if (i < n) {
            out.data[i] = static_cast<float>(img.data[i] + spec.sigma * radius * std::sin(angle));
            ++i;
        }
    }
    return out;
}

FrameStack make_dataset(const Image& clean, double sigma, int frame_count, std::uint64_t seed,
                        std::string source_id) {
    if (frame_count < 1) {
        throw std::invalid_argument("make_dataset: frame count must be >= 1");
    }
    FrameStack stack;
    stack.sigma = sigma;
    stack.seed = seed;
    stack.source_id = std::move(source_id);
    stack.frames.reserve(static_cast<std::size_t>(frame_count));
    for (int i = 0; i < frame_count; ++i) {
        stack.frames.push_back(add_awgn(clean, NoiseSpec{sigma, subseed(seed, static_cast<std::uint64_t>(i))}));
    }
    return stack;
}

}  // namespace bm3d
