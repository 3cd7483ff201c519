// SPDX-License-Identifier: Apache-2.0
//
// irsim: link-level simulator and learning toolkit for IRS-assisted MIMO downlinks

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace irsim {

// splitmix64 finalizer. Used instead of std::hash so that derived seeds are
// stable across compilers and standard libraries.
inline std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable hash of (master seed, purpose label). Every subsystem draws its
// randomness from a seed derived this way, so one CLI --seed pins the
// whole pipeline.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose)
{
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a over the label bytes
    for (unsigned char c : purpose) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(master ^ mix64(h));
}

// Per-sample variant: sample index folded in so that parallel and serial
// generation of sample i consume identical random streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose, std::uint64_t index)
{
    return mix64(derive_seed(master, purpose) ^ mix64(index + 0x2545f4914f6cdd1dULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed)
{
    return std::mt19937_64(seed);
}

// One draw of a circularly-symmetric complex Gaussian with unit variance,
// i.e. real and imaginary parts are N(0, 1/2).
inline std::complex<double> randcn(std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

} // namespace irsim
