#include "tdsce/channel/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tdsce {

TapTemplate quantize_profile(const ChannelProfile& p) {
    if (p.delays_us.empty()) throw Error("empty profile");
    if (p.delays_us.size() != p.powers_db.size()) throw Error("dimension mismatch");
    if (!(p.fs_hz > 0.0)) throw Error("fs_hz must be positive");
    std::map<std::size_t, double> merged;
    for (std::size_t k = 0; k < p.delays_us.size(); ++k) {
        if (p.delays_us[k] < 0.0) throw Error("negative delay");
        const auto tau = static_cast<std::size_t>(std::llround(p.delays_us[k] * p.fs_hz * 1e-6));
        merged[tau] += std::pow(10.0, p.powers_db[k] / 10.0);
    }
    double total = 0.0;
    for (const auto& [tau, pw] : merged) total += pw;
    TapTemplate t;
    for (const auto& [tau, pw] : merged) {
        t.delays.push_back(tau);
        t.powers.push_back(pw / total);
    }
    return t;
}

ChannelProfile parse_profile(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    static const std::set<std::string> allowed{"name", "delays_us", "powers_db", "doppler", "fc_hz", "fs_hz", "source"};
    for (const auto& [key, _] : j.items()) {
        if (!allowed.count(key)) throw Error("unknown profile key: " + key);
    }
    ChannelProfile p;
    p.name = j.at("name").get<std::string>();
    p.delays_us = j.at("delays_us").get<RVec>();
    p.powers_db = j.at("powers_db").get<RVec>();
    if (j.contains("fc_hz")) p.fc_hz = j.at("fc_hz").get<double>();
    if (j.contains("fs_hz")) p.fs_hz = j.at("fs_hz").get<double>();
    if (j.contains("source")) p.source = j.at("source").get<std::string>();
    if (j.contains("doppler")) {
        const auto& d = j.at("doppler");
        for (const auto& [key, _] : d.items()) {
            if (key != "type" && key != "v_mps") throw Error("unknown doppler key: " + key);
        }
        const auto type = d.at("type").get<std::string>();
        if (type == "static") {
            p.doppler.kind = DopplerKind::Static;
        } else if (type == "jakes") {
            p.doppler.kind = DopplerKind::Jakes;
            p.doppler.v_mps = d.at("v_mps").get<double>();
        } else {
            throw Error("unknown doppler type: " + type);
        }
    }
    if (p.delays_us.size() != p.powers_db.size()) throw Error("dimension mismatch");
    return p;
}

ChannelProfile load_profile_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open profile " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_profile(ss.str());
}

ChannelProfile load_profile(const std::string& name, const std::filesystem::path& dir) {
    return load_profile_file(dir / (name + ".json"));
}

std::vector<ChannelProfile> list_profiles(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<ChannelProfile> out;
    for (const auto& f : files) out.push_back(load_profile_file(f));
    return out;
}

}  // namespace tdsce
