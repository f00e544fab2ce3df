#include "tdsce/harness/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tdsce {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw Error(where + " must be an object");
    for (const auto& [key, _] : j.items()) {
        if (!allowed.count(key)) throw Error("unknown config key: " + where + key);
    }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <typename T>
void read_opt(const json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <typename T>
json opt_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::RecoveryVsG: return "recovery_vs_g";
        case ExperimentKind::MseVsSnr: return "mse_vs_snr";
        case ExperimentKind::BerVsSnr: return "ber_vs_snr";
        case ExperimentKind::CirSnapshot: return "cir_snapshot";
    }
    return "unknown";
}

ExperimentKind parse_experiment(const std::string& s) {
    if (s == "recovery_vs_g") return ExperimentKind::RecoveryVsG;
    if (s == "mse_vs_snr") return ExperimentKind::MseVsSnr;
    if (s == "ber_vs_snr") return ExperimentKind::BerVsSnr;
    if (s == "cir_snapshot") return ExperimentKind::CirSnapshot;
    throw Error("unknown experiment: " + s);
}

int ExperimentConfig::b_for(double snr_db) const {
    int b = coarse.b;
    double best = -1e300;
    for (const auto& band : b_table) {
        if (band.min_snr_db <= snr_db && band.min_snr_db >= best) {
            best = band.min_snr_db;
            b = band.b;
        }
    }
    return b;
}

void ExperimentConfig::validate() const {
    frame.validate();
    if (frame.dual_pn) throw Error("frame.dual_pn must be false; the dpn estimator builds its own dual-PN stream");
    if (trials < 1) throw Error("trials must be at least 1");
    if (snr_grid_db.empty()) throw Error("snr_grid_db must be nonempty");
    if (experiment == ExperimentKind::RecoveryVsG) {
        if (g_grid.empty()) throw Error("g_grid must be nonempty");
        for (auto g : g_grid)
            if (g < 1 || g > frame.M) throw Error("G out of range");
    }
    if (estimators.empty()) throw Error("estimators must be nonempty");
    for (const auto& e : estimators) {
        const auto& k = known_estimators();
        if (std::find(k.begin(), k.end(), e) == k.end()) throw Error("unknown estimator: " + e);
    }
    auto b_ok = [](int b) { return b >= 0 && b <= 5; };
    if (!b_ok(coarse.b)) throw Error("b must lie in [0, 5]");
    for (const auto& band : b_table)
        if (!b_ok(band.b)) throw Error("b must lie in [0, 5]");
    if (coarse.a && *coarse.a < 0) throw Error("a must be nonnegative");
    if (cap_R_d < 1) throw Error("cap_rd must be positive");
    if (static_R_g1 < 1 || static_R_g1 % 2 == 0) throw Error("static_rg1 must be odd and positive");
    if (dpn_R < 1) throw Error("dpn R must be positive");
    if (pa_iht.max_iters < 1 || iht_max_iters < 1) throw Error("max_iters must be positive");
}

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(std::string("config parse error: ") + e.what());
    }
    check_keys(j, {"experiment", "profile", "snr_grid_db", "g_grid", "trials", "estimators", "seed", "threads",
                   "frame", "pn", "coarse", "coherence", "pa_iht", "iht", "cosamp", "dpn", "ber"},
               "");
    ExperimentConfig c;
    try {
        if (j.contains("experiment")) c.experiment = parse_experiment(j.at("experiment").get<std::string>());
        read(j, "profile", c.profile);
        read(j, "snr_grid_db", c.snr_grid_db);
        read(j, "g_grid", c.g_grid);
        read(j, "trials", c.trials);
        read(j, "estimators", c.estimators);
        read(j, "seed", c.seed);
        read(j, "threads", c.threads);
        if (j.contains("frame")) {
            const auto& f = j.at("frame");
            check_keys(f, {"M", "N", "dual_pn", "symbols_per_run", "modulation"}, "frame.");
            read(f, "M", c.frame.M);
            read(f, "N", c.frame.N);
            read(f, "dual_pn", c.frame.dual_pn);
            read(f, "symbols_per_run", c.frame.symbols_per_run);
            if (f.contains("modulation") && f.at("modulation").get<std::string>() != "QPSK")
                throw Error("only QPSK modulation is supported");
        }
        c.pn = default_generator(c.frame.M);
        if (j.contains("pn")) {
            const auto& p = j.at("pn");
            check_keys(p, {"degree", "taps", "seed"}, "pn.");
            read(p, "degree", c.pn.degree);
            read(p, "taps", c.pn.taps);
            read(p, "seed", c.pn.seed);
        }
        if (j.contains("coarse")) {
            const auto& p = j.at("coarse");
            check_keys(p, {"a", "a_fraction", "b", "b_table", "eth_noise_factor", "eth_relative", "eth_guard_band"},
                       "coarse.");
            read_opt(p, "a", c.coarse.a);
            read(p, "a_fraction", c.coarse.a_fraction);
            read(p, "b", c.coarse.b);
            read(p, "eth_noise_factor", c.coarse.threshold.noise_factor);
            read(p, "eth_relative", c.coarse.threshold.relative);
            read(p, "eth_guard_band", c.coarse.threshold.guard_band);
            if (p.contains("b_table")) {
                for (const auto& band : p.at("b_table")) {
                    check_keys(band, {"min_snr_db", "b"}, "coarse.b_table.");
                    c.b_table.push_back({band.at("min_snr_db").get<double>(), band.at("b").get<int>()});
                }
            }
        }
        if (j.contains("coherence")) {
            const auto& p = j.at("coherence");
            check_keys(p, {"cap_rd", "static_rg1", "rd", "rg1", "rg2"}, "coherence.");
            read(p, "cap_rd", c.cap_R_d);
            read(p, "static_rg1", c.static_R_g1);
            read_opt(p, "rd", c.R_d);
            read_opt(p, "rg1", c.R_g1);
            read_opt(p, "rg2", c.R_g2);
        }
        if (j.contains("pa_iht")) {
            const auto& p = j.at("pa_iht");
            check_keys(p, {"max_iters", "tol"}, "pa_iht.");
            read(p, "max_iters", c.pa_iht.max_iters);
            read(p, "tol", c.pa_iht.tol);
        }
        if (j.contains("iht")) {
            check_keys(j.at("iht"), {"max_iters"}, "iht.");
            read(j.at("iht"), "max_iters", c.iht_max_iters);
        }
        if (j.contains("cosamp")) {
            check_keys(j.at("cosamp"), {"max_iters"}, "cosamp.");
            read(j.at("cosamp"), "max_iters", c.cosamp_max_iters);
        }
        if (j.contains("dpn")) {
            check_keys(j.at("dpn"), {"R"}, "dpn.");
            read(j.at("dpn"), "R", c.dpn_R);
        }
        if (j.contains("ber")) {
            check_keys(j.at("ber"), {"min_bits"}, "ber.");
            read(j.at("ber"), "min_bits", c.ber_min_bits);
        }
    } catch (const json::exception& e) {
        throw Error(std::string("config type error: ") + e.what());
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string canonical_json(const ExperimentConfig& c) {
    json bt = json::array();
    for (const auto& band : c.b_table) bt.push_back({{"min_snr_db", band.min_snr_db}, {"b", band.b}});
    json j{
        {"experiment", to_string(c.experiment)},
        {"profile", c.profile},
        {"snr_grid_db", c.snr_grid_db},
        {"g_grid", c.g_grid},
        {"trials", c.trials},
        {"estimators", c.estimators},
        {"seed", c.seed},
        {"frame", {{"M", c.frame.M}, {"N", c.frame.N}, {"dual_pn", c.frame.dual_pn}, {"modulation", "QPSK"}}},
        {"pn", {{"degree", c.pn.degree}, {"taps", c.pn.taps}, {"seed", c.pn.seed}}},
        {"coarse",
         {{"a", opt_json(c.coarse.a)},
          {"a_fraction", c.coarse.a_fraction},
          {"b", c.coarse.b},
          {"b_table", bt},
          {"eth_noise_factor", c.coarse.threshold.noise_factor},
          {"eth_relative", c.coarse.threshold.relative},
          {"eth_guard_band", c.coarse.threshold.guard_band}}},
        {"coherence",
         {{"cap_rd", c.cap_R_d},
          {"static_rg1", c.static_R_g1},
          {"rd", opt_json(c.R_d)},
          {"rg1", opt_json(c.R_g1)},
          {"rg2", opt_json(c.R_g2)}}},
        {"pa_iht", {{"max_iters", c.pa_iht.max_iters}, {"tol", c.pa_iht.tol}}},
        {"iht", {{"max_iters", c.iht_max_iters}}},
        {"cosamp", {{"max_iters", c.cosamp_max_iters}}},
        {"dpn", {{"R", c.dpn_R}}},
        {"ber", {{"min_bits", c.ber_min_bits}}},
    };
    return j.dump();
}

std::string config_hash(const ExperimentConfig& cfg) {
    const std::string s = canonical_json(cfg);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos, 0);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (s.empty() || pos != s.size() || s[0] == '-') throw Error("invalid " + what + ": " + s);
    return v;
}

std::uint64_t resolve_seed(std::uint64_t config_seed, const char* env_value, const std::string& cli_value) {
    std::uint64_t seed = config_seed;
    if (env_value) seed = parse_u64(env_value, "SIM_SEED");
    if (!cli_value.empty()) seed = parse_u64(cli_value, "seed");
    return seed;
}

}  // namespace tdsce
