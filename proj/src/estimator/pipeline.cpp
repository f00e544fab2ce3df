#include "tdsce/estimator/pipeline.hpp"

#include <algorithm>

namespace tdsce {

ChannelEstimate refine_detection(const Measurement& meas, const ChannelEstimate& detection, std::size_t M) {
    ChannelEstimate out;
    OpCounter ops;
    if (detection.support.empty()) {
        out = estimate_from_coeffs(CVec{}, M);
        out.status = EstimateStatus::Failed;
    } else if (detection.support.size() <= meas.G_hat()) {
        try {
            out = ml_refine(meas, detection.support, M, &ops);
        } catch (const Error&) {
            out = ml_refine_ranked(meas, detection, M, &ops);
        }
    } else {
        out = ml_refine_ranked(meas, detection, M, &ops);
    }
    out.ops = detection.ops;
    out.ops.mul(ops.mults);
    out.ops.add(ops.adds);
    out.iterations_used = detection.iterations_used;
    out.under_observed = out.under_observed || detection.under_observed;
    return out;
}

PaIhtRun run_pa_iht(const ReceivedFrame& rx, std::span<const cplx> pn, const CoherenceParams& params, std::size_t i,
                    const CoarseSettings& coarse, const PaIhtOptions& opt, std::optional<std::size_t> forced_L_hat) {
    PaIhtRun run;
    run.priors = coarse_delays(rx, pn, params, i, coarse, forced_L_hat);
    run.priors.h_bar_prime = coarse_gains(rx, pn, params, i, run.priors.L_hat);
    run.meas.emplace(build_measurement(rx, pn, run.priors, params, i));
    run.detection = pa_iht(*run.meas, run.priors, opt);
    run.refined = refine_detection(*run.meas, run.detection, pn.size());
    return run;
}

McosampRun run_mcosamp(const ReceivedFrame& rx, std::span<const cplx> pn, std::size_t i, const CoarseSettings& coarse,
                       std::optional<std::size_t> forced_L_hat) {
    McosampRun run;
    run.priors = coarse_delays_main_only(rx, pn, i, coarse, forced_L_hat);
    run.meas.emplace(build_measurement(rx, pn, run.priors.L_hat, run.priors.S, 1, i));
    CosampOptions opt;
    opt.max_iters = std::max<int>(1, static_cast<int>(run.priors.S) - static_cast<int>(run.priors.S0));
    opt.stop_on_no_decrease = true;
    run.estimate = cosamp(*run.meas, run.priors.S, pn.size(), run.priors.D0, opt);
    return run;
}

}  // namespace tdsce
