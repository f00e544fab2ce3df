#include "tdsce/harness/rng.hpp"

namespace tdsce {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial, Stream stream) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ trial);
    return splitmix64(h ^ static_cast<std::uint64_t>(stream));
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t trial, Stream stream) {
    return std::mt19937_64(derive_seed(seed, trial, stream));
}

}  // namespace tdsce
