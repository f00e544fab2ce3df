#include "tdsce/harness/trial.hpp"

#include <cmath>

#include "tdsce/channel/transmit.hpp"
#include "tdsce/harness/rng.hpp"

namespace tdsce {

std::filesystem::path default_profiles_dir() {
    if (const char* env = std::getenv("TDSCE_PROFILES")) return env;
    return std::filesystem::path(TDSCE_DATA_DIR) / "profiles";
}

Scenario make_scenario(const ExperimentConfig& cfg, const ChannelProfile& profile) {
    cfg.validate();
    Scenario sc;
    sc.cfg = cfg;
    sc.profile = profile;
    sc.taps = quantize_profile(profile);
    const std::size_t M = cfg.frame.M, N = cfg.frame.N;
    if (sc.taps.length() > M) throw Error("guard violated");
    sc.params = coherence_params(profile, M, N, cfg.cap_R_d, cfg.static_R_g1);
    if (cfg.R_d) sc.params.R_d = *cfg.R_d;
    if (cfg.R_g1) sc.params.R_g1 = *cfg.R_g1;
    if (cfg.R_g2) sc.params.R_g2 = *cfg.R_g2;
    if (sc.params.R_d < 1 || sc.params.R_g1 < 1 || sc.params.R_g2 < 1) throw Error("R overrides must be positive");
    sc.pn = generate_pn(M, cfg.pn);
    sc.chips = sc.pn.chips();
    sc.i = static_cast<std::size_t>(std::max({sc.params.R_d, sc.params.R_g2, cfg.dpn_R}));
    sc.n_sym = sc.i + static_cast<std::size_t>(std::max({sc.params.R_d, sc.params.R_g2 + 1, cfg.dpn_R})) + 2;
    sc.single = cfg.frame;
    sc.single.dual_pn = false;
    sc.single.symbols_per_run = sc.n_sym;
    sc.dual = sc.single;
    sc.dual.dual_pn = true;
    sc.t_sym = static_cast<double>(M + N) / profile.fs_hz;
    return sc;
}

Scenario make_scenario(const ExperimentConfig& cfg, const std::filesystem::path& profiles_dir) {
    return make_scenario(cfg, load_profile(cfg.profile, profiles_dir));
}

TrialSignals simulate_trial(const Scenario& sc, std::uint64_t seed, std::size_t trial, double snr_db, bool single,
                            bool dual) {
    TrialSignals ts;
    auto prng = make_rng(seed, trial, Stream::Payload);
    std::bernoulli_distribution coin(0.5);
    Bits bits(sc.n_sym * sc.single.bits_per_symbol());
    for (auto& b : bits) b = coin(prng) ? 1 : 0;
    const auto per = sc.single.bits_per_symbol();
    ts.bits.assign(bits.begin() + static_cast<std::ptrdiff_t>(sc.i * per),
                   bits.begin() + static_cast<std::ptrdiff_t>((sc.i + 1) * per));

    GainProcess gains(sc.taps, sc.params.f_d_hz, sc.t_sym, derive_seed(seed, trial, Stream::Channel));
    std::vector<SparseCir> cirs(sc.n_sym);
    for (std::size_t k = 0; k < sc.n_sym; ++k) cirs[k] = gains.at(k);
    ts.truth = cirs[sc.i];
    ts.truth_dense = ts.truth.dense(sc.single.M);

    auto run = [&](const FrameConfig& f, Stream stream) {
        const SymbolStream s = assemble_stream(f, bits, sc.pn);
        auto nrng = make_rng(seed, trial, stream);
        return ReceivedFrame(transmit(s.transmit(), f.symbol_length(), f.M, cirs, snr_db, nrng), f);
    };
    if (single) ts.rx.emplace(run(sc.single, Stream::Noise));
    if (dual) ts.rx_dual.emplace(run(sc.dual, Stream::DualNoise));
    return ts;
}

}  // namespace tdsce
