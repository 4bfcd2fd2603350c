#include "bm3d/transforms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bm3d {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// bior1.5 filter bank, periodized. Analysis low-pass is the 10-tap spline
// dual of the 2-tap box synthesis filter; high-pass filters follow the
// alternating-flip construction. The offsets center the taps so that
// synthesis is the exact inverse of analysis for every even length.
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kDecLo[10] = {3 * kSqrt2 / 256,   -3 * kSqrt2 / 256, -22 * kSqrt2 / 256,
                               22 * kSqrt2 / 256,  128 * kSqrt2 / 256, 128 * kSqrt2 / 256,
                               22 * kSqrt2 / 256,  -22 * kSqrt2 / 256, -3 * kSqrt2 / 256,
                               3 * kSqrt2 / 256};
constexpr double kDecHi[2] = {kSqrt2 / 2, -kSqrt2 / 2};
constexpr double kRecLo[2] = {kSqrt2 / 2, kSqrt2 / 2};
constexpr double kRecHi[10] = {3 * kSqrt2 / 256,   3 * kSqrt2 / 256,  -22 * kSqrt2 / 256,
                               -22 * kSqrt2 / 256, 128 * kSqrt2 / 256, -128 * kSqrt2 / 256,
                               22 * kSqrt2 / 256,  22 * kSqrt2 / 256,  -3 * kSqrt2 / 256,
                               -3 * kSqrt2 / 256};
constexpr int kOffDecLo = 4;
constexpr int kOffDecHi = 0;
constexpr int kOffRecLo = 0;
constexpr int kOffRecHi = 4;

void bior_fwd_1d(const double* x, double* out, int n) {
    const int half = n / 2;
    for (int m = 0; m < half; ++m) {
        double a = 0.0, d = 0.0;
        for (int t = 0; t < 10; ++t) {
            a += kDecLo[t] * x[((2 * m + t - kOffDecLo) % n + n) % n];
        }
        for (int t = 0; t < 2; ++t) {
            d += kDecHi[t] * x[((2 * m + t - kOffDecHi) % n + n) % n];
        }
        out[m] = a;
        out[half + m] = d;
    }
}

void bior_inv_1d(const double* y, double* out, int n) {
    const int half = n / 2;
    for (int i = 0; i < n; ++i) {
        out[i] = 0.0;
    }
    for (int m = 0; m < half; ++m) {
        for (int t = 0; t < 2; ++t) {
            out[((2 * m + t - kOffRecLo) % n + n) % n] += kRecLo[t] * y[m];
        }
        for (int t = 0; t < 10; ++t) {
            out[((2 * m + t - kOffRecHi) % n + n) % n] += kRecHi[t] * y[half + m];
        }
    }
}

// Full dyadic 2D decomposition, in place on a k x k block.
void bior_fwd_2d(double* p, int k) {
    std::vector<double> tmp(static_cast<std::size_t>(k));
    for (int n = k; n >= 2; n /= 2) {
        for (int r = 0; r < n; ++r) {
            bior_fwd_1d(p + static_cast<std::size_t>(r) * k, tmp.data(), n);
            for (int c = 0; c < n; ++c) {
                p[static_cast<std::size_t>(r) * k + c] = tmp[c];
            }
        }
        std::vector<double> col(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) {
            for (int r = 0; r < n; ++r) {
                col[r] = p[static_cast<std::size_t>(r) * k + c];
            }
            bior_fwd_1d(col.data(), tmp.data(), n);
            for (int r = 0; r < n; ++r) {
                p[static_cast<std::size_t>(r) * k + c] = tmp[r];
            }
        }
    }
}

void bior_inv_2d(double* p, int k) {
    std::vector<double> tmp(static_cast<std::size_t>(k));
    std::vector<double> col(static_cast<std::size_t>(k));
    for (int n = 2; n <= k; n *= 2) {
        for (int c = 0; c < n; ++c) {
            for (int r = 0; r < n; ++r) {
                col[r] = p[static_cast<std::size_t>(r) * k + c];
            }
            bior_inv_1d(col.data(), tmp.data(), n);
            for (int r = 0; r < n; ++r) {
                p[static_cast<std::size_t>(r) * k + c] = tmp[r];
            }
        }
        for (int r = 0; r < n; ++r) {
            bior_inv_1d(p + static_cast<std::size_t>(r) * k, tmp.data(), n);
            for (int c = 0; c < n; ++c) {
                p[static_cast<std::size_t>(r) * k + c] = tmp[c];
            }
        }
    }
}

// Dense operator tables. Every transform is applied as a precomputed
// matrix multiply; tables are immutable once built.
std::vector<double> build_wht_matrix(int K) {
    std::vector<double> m(static_cast<std::size_t>(K) * K, 0.0);
    m[0] = 1.0;
    for (int n = 1; n < K; n *= 2) {
        // Expand H_n to H_2n = 1/sqrt(2) [[H, H], [H, -H]], in place from
        // the top-left n x n block.
        const double s = 1.0 / kSqrt2;
        for (int r = n - 1; r >= 0; --r) {
            for (int c = n - 1; c >= 0; --c) {
                const double v = m[static_cast<std::size_t>(r) * K + c] * s;
                m[static_cast<std::size_t>(r) * K + c] = v;
                m[static_cast<std::size_t>(r) * K + c + n] = v;
                m[static_cast<std::size_t>(r + n) * K + c] = v;
                m[static_cast<std::size_t>(r + n) * K + c + n] = -v;
            }
        }
    }
    return m;
}

std::vector<double> build_dct2d_matrix(int k, Direction dir) {
    // 1D orthonormal DCT-II rows.
    std::vector<double> d1(static_cast<std::size_t>(k) * k);
    for (int u = 0; u < k; ++u) {
        const double alpha = (u == 0) ? std::sqrt(1.0 / k) : std::sqrt(2.0 / k);
        for (int x = 0; x < k; ++x) {
            d1[static_cast<std::size_t>(u) * k + x] =
                alpha * std::cos(std::numbers::pi * (2.0 * x + 1.0) * u / (2.0 * k));
        }
    }
    const int kk = k * k;
    std::vector<double> op(static_cast<std::size_t>(kk) * kk);
    for (int u = 0; u < k; ++u) {
        for (int v = 0; v < k; ++v) {
            for (int x = 0; x < k; ++x) {
                for (int y = 0; y < k; ++y) {
                    const double f = d1[static_cast<std::size_t>(u) * k + x] *
                                     d1[static_cast<std::size_t>(v) * k + y];
                    if (dir == Direction::Forward) {
                        op[(static_cast<std::size_t>(u) * k + v) * kk + (x * k + y)] = f;
                    } else {
                        // Orthonormal, so the inverse is the transpose.
                        op[(static_cast<std::size_t>(x) * k + y) * kk + (u * k + v)] = f;
                    }
                }
            }
        }
    }
    return op;
}

std::vector<double> build_bior2d_matrix(int k, Direction dir) {
    const int kk = k * k;
    std::vector<double> op(static_cast<std::size_t>(kk) * kk);
    std::vector<double> basis(static_cast<std::size_t>(kk));
    for (int j = 0; j < kk; ++j) {
        for (int i = 0; i < kk; ++i) {
            basis[i] = (i == j) ? 1.0 : 0.0;
        }
        if (dir == Direction::Forward) {
            bior_fwd_2d(basis.data(), k);
        } else {
            bior_inv_2d(basis.data(), k);
        }
        for (int i = 0; i < kk; ++i) {
            op[static_cast<std::size_t>(i) * kk + j] = basis[i];
        }
    }
    return op;
}

const std::vector<double>& cached_matrix(std::map<int, std::vector<double>>& cache, std::mutex& mu,
                                         int key, std::vector<double> (*build)(int)) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build(key)).first;
    }
    return it->second;
}

const std::vector<double>& wht_matrix(int K) {
    static std::mutex mu;
    static std::map<int, std::vector<double>> cache;
    return cached_matrix(cache, mu, K, &build_wht_matrix);
}

const std::vector<double>& spatial_matrix(SpatialTransform spatial, int k, Direction dir) {
    static std::mutex mu;
    static std::map<int, std::vector<double>> cache;
    const int key = k * 16 + (spatial == SpatialTransform::Dct ? 2 : 0) +
                    (dir == Direction::Inverse ? 1 : 0);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<double> m = (spatial == SpatialTransform::Dct) ? build_dct2d_matrix(k, dir)
                                                                   : build_bior2d_matrix(k, dir);
        it = cache.emplace(key, std::move(m)).first;
    }
    return it->second;
}

void matvec(const std::vector<double>& m, const double* x, double* y, int n) {
    for (int r = 0; r < n; ++r) {
        const double* row = m.data() + static_cast<std::size_t>(r) * n;
        double sum = 0.0;
        for (int c = 0; c < n; ++c) {
            sum += row[c] * x[c];
        }
        y[r] = sum;
    }
}

void check_spatial_size(SpatialTransform spatial, int k) {
    if (spatial == SpatialTransform::Bior15) {
        if (k != 4 && k != 8 && k != 16) {
            throw std::invalid_argument("bior15: patch size must be 4, 8, or 16");
        }
    } else if (k < 2) {
        throw std::invalid_argument("dct: patch size must be >= 2");
    }
}

}  // namespace

std::vector<double> wht_1d(std::span<const double> v, Direction dir) {
    const int K = static_cast<int>(v.size());
    if (!is_pow2(K)) {
        throw std::invalid_argument("wht_1d: length must be a power of two");
    }
    // The orthonormal natural-order WHT matrix is its own inverse.
    (void)dir;
    const std::vector<double>& m = wht_matrix(K);
    std::vector<double> out(v.size());
    matvec(m, v.data(), out.data(), K);
    return out;
}

Patch bior15_2d(const Patch& p, Direction dir) {
    check_spatial_size(SpatialTransform::Bior15, p.k);
    const std::vector<double>& m = spatial_matrix(SpatialTransform::Bior15, p.k, dir);
    Patch out(p.k);
    matvec(m, p.v.data(), out.v.data(), p.k * p.k);
    return out;
}

Patch dct_2d(const Patch& p, Direction dir) {
    check_spatial_size(SpatialTransform::Dct, p.k);
    const std::vector<double>& m = spatial_matrix(SpatialTransform::Dct, p.k, dir);
    Patch out(p.k);
    matvec(m, p.v.data(), out.v.data(), p.k * p.k);
    return out;
}

TransformedGroup transform_group(const Group3D& g, SpatialTransform spatial) {
    const int K = g.group_size();
    const int kk = g.k * g.k;
    if (!is_pow2(K)) {
        throw std::invalid_argument("transform_group: group size must be a power of two");
    }
    if (g.values.size() != static_cast<std::size_t>(K) * kk) {
        throw std::invalid_argument("transform_group: inconsistent patch sizes in group");
    }
    check_spatial_size(spatial, g.k);

    TransformedGroup t;
    t.k = g.k;
    t.refs = g.refs;
    t.coeffs.resize(g.values.size());

    const std::vector<double>& sm = spatial_matrix(spatial, g.k, Direction::Forward);
    for (int i = 0; i < K; ++i) {
        matvec(sm, g.member(i), t.coeffs.data() + static_cast<std::size_t>(i) * kk, kk);
    }

    if (K > 1) {
        const std::vector<double>& hm = wht_matrix(K);
        std::vector<double> in(static_cast<std::size_t>(K)), out(static_cast<std::size_t>(K));
        for (int pos = 0; pos < kk; ++pos) {
            for (int i = 0; i < K; ++i) {
                in[i] = t.coeffs[static_cast<std::size_t>(i) * kk + pos];
            }
            matvec(hm, in.data(), out.data(), K);
            for (int i = 0; i < K; ++i) {
                t.coeffs[static_cast<std::size_t>(i) * kk + pos] = out[i];
            }
        }
    }
    return t;
}

Group3D inverse_transform_group(const TransformedGroup& t, SpatialTransform spatial) {
    const int K = t.group_size();
    const int kk = t.k * t.k;
    if (!is_pow2(K) || t.coeffs.size() != static_cast<std::size_t>(K) * kk) {
        throw std::invalid_argument("inverse_transform_group: malformed coefficient tensor");
    }
    check_spatial_size(spatial, t.k);

    std::vector<double> spectral = t.coeffs;
    if (K > 1) {
        const std::vector<double>& hm = wht_matrix(K);
        std::vector<double> in(static_cast<std::size_t>(K)), out(static_cast<std::size_t>(K));
        for (int pos = 0; pos < kk; ++pos) {
            for (int i = 0; i < K; ++i) {
                in[i] = spectral[static_cast<std::size_t>(i) * kk + pos];
            }
            matvec(hm, in.data(), out.data(), K);
            for (int i = 0; i < K; ++i) {
                spectral[static_cast<std::size_t>(i) * kk + pos] = out[i];
            }
        }
    }

    Group3D g;
    g.k = t.k;
    g.refs = t.refs;
    g.values.resize(spectral.size());
    const std::vector<double>& sm = spatial_matrix(spatial, t.k, Direction::Inverse);
    for (int i = 0; i < K; ++i) {
        matvec(sm, spectral.data() + static_cast<std::size_t>(i) * kk, g.member(i), kk);
    }
    return g;
}

}  // namespace bm3d
