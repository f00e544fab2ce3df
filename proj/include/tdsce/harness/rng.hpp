#pragma once

#include <cstdint>
#include <random>

namespace tdsce {

enum class Stream : std::uint64_t { Payload = 1, Channel = 2, Noise = 3, DualNoise = 4, Instance = 5 };

std::uint64_t splitmix64(std::uint64_t x);

/// Independent seed per (run seed, trial, stream); no sequential coupling between trials.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial, Stream stream);

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t trial, Stream stream);

}  // namespace tdsce
