#include "bm3d/image_io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bm3d {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

// Reads the next whitespace-delimited header token, skipping '#' comment
// lines (PGM allows them between header fields).
bool next_token(std::istream& in, std::string& tok) {
    tok.clear();
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {
            }
            continue;
        }
        if (!std::isspace(ch)) {
            break;
        }
    }
    if (ch == EOF) {
        return false;
    }
    do {
        tok.push_back(static_cast<char>(ch));
        ch = in.get();
    } while (ch != EOF && !std::isspace(ch));
    return true;
}

bool parse_int(const std::string& tok, long& value) {
    try {
        std::size_t pos = 0;
        value = std::stol(tok, &pos);
        return pos == tok.size();
    } catch (...) {
        return false;
    }
}

Image load_pgm(std::ifstream& in, const std::filesystem::path& path) {
    std::string tok;
    long w = 0, h = 0, maxval = 0;
    if (!next_token(in, tok) || !parse_int(tok, w) || !next_token(in, tok) || !parse_int(tok, h) ||
        !next_token(in, tok) || !parse_int(tok, maxval) || w < 1 || h < 1 || maxval < 1) {
        fail(path, "malformed PGM header");
    }
    if (maxval > 255) {
        fail(path, "unsupported format: 16-bit PGM (maxval " + std::to_string(maxval) + ")");
    }
    // Exactly one whitespace byte separates the header from the raster.
    std::vector<unsigned char> raw(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
        fail(path, "truncated PGM raster");
    }
    Image img(static_cast<int>(w), static_cast<int>(h));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        img.data[i] = static_cast<float>(raw[i]);
    }
    return img;
}

float byteswap_float(float v) {
    std::uint32_t u;
    std::memcpy(&u, &v, 4);
    u = ((u & 0xff000000u) >> 24) | ((u & 0x00ff0000u) >> 8) | ((u & 0x0000ff00u) << 8) |
        ((u & 0x000000ffu) << 24);
    std::memcpy(&v, &u, 4);
    return v;
}

// Grayscale PFM. Scanlines are stored bottom-to-top; a negative scale
// marks little-endian sample order.
Image load_pfm(std::ifstream& in, const std::filesystem::path& path) {
    std::string tok;
    long w = 0, h = 0;
    double scale = 0.0;
    if (!next_token(in, tok) || !parse_int(tok, w) || !next_token(in, tok) || !parse_int(tok, h) ||
        w < 1 || h < 1) {
        fail(path, "malformed PFM header");
    }
    if (!next_token(in, tok)) {
        fail(path, "malformed PFM header");
    }
    try {
        scale = std::stod(tok);
    } catch (...) {
        fail(path, "malformed PFM header");
    }
    const bool file_little = scale < 0.0;
    const bool host_little = std::endian::native == std::endian::little;
    Image img(static_cast<int>(w), static_cast<int>(h));
    std::vector<float> line(static_cast<std::size_t>(w));
    for (long r = h - 1; r >= 0; --r) {
        in.read(reinterpret_cast<char*>(line.data()), static_cast<std::streamsize>(w) * 4);
        if (in.gcount() != static_cast<std::streamsize>(w) * 4) {
            fail(path, "truncated PFM raster");
        }
        float* dst = img.row(static_cast<int>(r));
        for (long c = 0; c < w; ++c) {
            dst[c] = (file_little == host_little) ? line[c] : byteswap_float(line[c]);
        }
    }
    return img;
}

}  // namespace

Image load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(path, "cannot open file");
    }
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2) {
        fail(path, "malformed PGM header");
    }
    if (magic[0] == 'P' && magic[1] == '5') {
        return load_pgm(in, path);
    }
    if (magic[0] == 'P' && magic[1] == 'f') {
        return load_pfm(in, path);
    }
    if (magic[0] == 'P' && magic[1] == 'F') {
        fail(path, "unsupported format: color PFM");
    }
    fail(path, "unsupported format (expected binary PGM 'P5' or grayscale PFM 'Pf')");
}

void save_image(const Image& img, const std::filesystem::path& path, SaveMode mode) {
    if (img.width < 1 || img.height < 1 ||
        img.data.size() != static_cast<std::size_t>(img.width) * img.height) {
        throw std::invalid_argument("save_image: invalid image");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(path, "cannot open file for writing");
    }
    if (mode == SaveMode::Pgm8Clamped) {
        out << "P5\n" << img.width << " " << img.height << "\n255\n";
        std::vector<unsigned char> raw(img.pixel_count());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            long v = std::lround(static_cast<double>(img.data[i]));
            if (v < 0) v = 0;
            if (v > 255) v = 255;
            raw[i] = static_cast<unsigned char>(v);
        }
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    } else {
        out << "Pf\n" << img.width << " " << img.height << "\n-1.0\n";
        const bool host_little = std::endian::native == std::endian::little;
        std::vector<float> line(static_cast<std::size_t>(img.width));
        for (int r = img.height - 1; r >= 0; --r) {
            const float* src = img.row(r);
            for (int c = 0; c < img.width; ++c) {
                line[c] = host_little ? src[c] : byteswap_float(src[c]);
            }
            out.write(reinterpret_cast<const char*>(line.data()),
                      static_cast<std::streamsize>(img.width) * 4);
        }
    }
    if (!out) {
        fail(path, "write failed");
    }
}

void write_dataset(const FrameStack& stack, const Image* clean, const std::filesystem::path& dir) {
    if (stack.frames.empty()) {
        throw std::invalid_argument("write_dataset: empty stack");
    }
    std::filesystem::create_directories(dir);
    if (clean != nullptr) {
        save_image(*clean, dir / "clean.pfm", SaveMode::PfmFloat);
    }
    char name[32];
    for (int i = 0; i < stack.frame_count(); ++i) {
        std::snprintf(name, sizeof(name), "frame_%03d.pfm", i);
        save_image(stack.frames[i], dir / name, SaveMode::PfmFloat);
    }
    std::ofstream meta(dir / "meta.txt", std::ios::trunc);
    if (!meta) {
        fail(dir / "meta.txt", "cannot open file for writing");
    }
    meta << "source_id=" << stack.source_id << "\n"
         << "sigma=" << stack.sigma << "\n"
         << "L=" << stack.frame_count() << "\n"
         << "seed=" << stack.seed << "\n";
}

Dataset read_dataset(const std::filesystem::path& dir) {
    const std::filesystem::path meta_path = dir / "meta.txt";
    std::ifstream meta(meta_path);
    if (!meta) {
        fail(meta_path, "missing dataset metadata");
    }
    Dataset ds;
    long frame_count = -1;
    std::string line;
    while (std::getline(meta, line)) {
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        try {
            if (key == "source_id") {
                ds.stack.source_id = value;
            } else if (key == "sigma") {
                ds.stack.sigma = std::stod(value);
            } else if (key == "L") {
                frame_count = std::stol(value);
            } else if (key == "seed") {
                ds.stack.seed = std::stoull(value);
            }
        } catch (...) {
            fail(meta_path, "malformed value for key '" + key + "'");
        }
    }
    if (frame_count < 1 || ds.stack.sigma <= 0.0) {
        fail(meta_path, "incomplete dataset metadata (need L >= 1 and sigma > 0)");
    }
    char name[32];
    for (long i = 0; i < frame_count; ++i) {
        std::snprintf(name, sizeof(name), "frame_%03ld.pfm", i);
        const std::filesystem::path frame_path = dir / name;
        if (!std::filesystem::exists(frame_path)) {
            fail(frame_path, "missing frame file");
        }
        ds.stack.frames.push_back(load_image(frame_path));
        if (!ds.stack.frames.back().same_dims(ds.stack.frames.front())) {
            fail(frame_path, "frame dimensions differ from frame_000");
        }
    }
    const std::filesystem::path clean_path = dir / "clean.pfm";
    if (std::filesystem::exists(clean_path)) {
        ds.clean = load_image(clean_path);
        if (!ds.clean->same_dims(ds.stack.frames.front())) {
            fail(clean_path, "clean image dimensions differ from frames");
        }
    }
    return ds;
}

}  // namespace bm3d
