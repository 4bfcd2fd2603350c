#pragma once

#include <filesystem>
#include <optional>

#include "bm3d/image.hpp"

namespace bm3d {

enum class SaveMode {
    Pgm8Clamped,  // 8-bit binary PGM; values rounded half-away-from-zero, clamped to [0,255]
    PfmFloat,     // grayscale PFM, 32-bit little-endian floats, lossless
};

// Reads a binary PGM (P5, 8-bit) or grayscale PFM file. PGM bytes map
// verbatim to [0,255]; PFM floats are passed through unclamped.
Image load_image(const std::filesystem::path& path);

void save_image(const Image& img, const std::filesystem::path& path, SaveMode mode);

// On-disk dataset layout:
//   <dir>/clean.pfm          optional ground truth
//   <dir>/frame_000.pfm ...  noisy frames (float PFM, unclamped)
//   <dir>/meta.txt           key=value lines: source_id, sigma, L, seed
struct Dataset {
    FrameStack stack;
    std::optional<Image> clean;
};

void write_dataset(const FrameStack& stack, const Image* clean, const std::filesystem::path& dir);

Dataset read_dataset(const std::filesystem::path& dir);

}  // namespace bm3d
