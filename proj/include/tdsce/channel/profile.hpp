#pragma once

#include <filesystem>
#include <string>

#include "tdsce/numerics/types.hpp"

namespace tdsce {

enum class DopplerKind { Static, Jakes };

struct Doppler {
    DopplerKind kind = DopplerKind::Static;
    double v_mps = 0.0;
};

struct ChannelProfile {
    std::string name;
    RVec delays_us;
    RVec powers_db;
    Doppler doppler;
    double fc_hz = 643e6;
    double fs_hz = 7.56e6;
    std::string source;
};

/// Sample-grid taps with linear powers summing to 1.
struct TapTemplate {
    std::vector<std::size_t> delays;
    RVec powers;

    std::size_t length() const { return delays.empty() ? 0 : delays.back() + 1; }
};

TapTemplate quantize_profile(const ChannelProfile& p);

ChannelProfile parse_profile(const std::string& json_text);
ChannelProfile load_profile_file(const std::filesystem::path& path);
/// Reads <dir>/<name>.json.
ChannelProfile load_profile(const std::string& name, const std::filesystem::path& dir);
std::vector<ChannelProfile> list_profiles(const std::filesystem::path& dir);

}  // namespace tdsce
