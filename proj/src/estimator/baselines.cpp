#include "tdsce/estimator/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tdsce/numerics/least_squares.hpp"

namespace tdsce {
namespace {

// Least squares over cols (in priority order), dependent columns dropped. Returns a length-L vector.
CVec fit(const Measurement& meas, const Support& cols, OpCounter* ops) {
    CVec x(meas.L_hat(), cplx(0.0, 0.0));
    if (cols.empty()) return x;
    CMatrix a = meas.phi.columns(cols);
    LsSolution sol = least_squares(a, meas.y_bar, ops, {.drop_dependent = true});
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (sol.kept[k]) x[cols[k]] = sol.coeffs[k];
    return x;
}

Support by_magnitude(std::span<const cplx> v, const Support& idx) {
    Support out = idx;
    std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return std::norm(v[a]) > std::norm(v[b]); });
    return out;
}

}  // namespace

ChannelEstimate iht_classic(const Measurement& meas, std::size_t S, std::size_t M, IhtOptions opt) {
    if (S == 0) throw Error("S must be positive");
    const std::size_t L = meas.L_hat();
    S = std::min(S, L);
    OpCounter ops;
    const double ynorm = norm(meas.y_bar);
    const double tol = opt.tol >= 0.0 ? opt.tol : 1e-8 * ynorm;
    CVec x(L, cplx(0.0, 0.0));
    CVec r = meas.y_bar;
    double u = ynorm;
    RVec history{u};
    EstimateStatus status = EstimateStatus::Ok;
    int iters = 0;
    for (int k = 1; k <= opt.max_iters && u >= tol; ++k) {
        CVec z = meas.phi.apply_adjoint(r, &ops);
        for (std::size_t t = 0; t < L; ++t) z[t] += x[t];
        x = hard_threshold(z, S);
        r = sub(meas.y_bar, meas.phi.apply(x, &ops));
        u = norm(r, &ops);
        history.push_back(u);
        iters = k;
        if (!std::isfinite(u) || u > opt.divergence_ratio * ynorm) {
            status = EstimateStatus::Diverged;
            break;
        }
    }
    for (auto& v : x)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) v = cplx(0.0, 0.0);
    ChannelEstimate e = estimate_from_coeffs(x, M);
    e.iterations_used = iters;
    e.ops = ops;
    e.status = status;
    e.residuals = std::move(history);
    e.under_observed = meas.under_observed;
    return e;
}

ChannelEstimate cosamp(const Measurement& meas, std::size_t S, std::size_t M, const std::optional<Support>& warm_support,
                       CosampOptions opt) {
    if (S == 0) throw Error("S must be positive");
    const std::size_t L = meas.L_hat();
    S = std::min(S, L);
    OpCounter ops;
    const double tol = opt.tol >= 0.0 ? opt.tol : 1e-8 * norm(meas.y_bar);
    const int max_iters = opt.max_iters > 0 ? opt.max_iters : static_cast<int>(S);

    CVec x(L, cplx(0.0, 0.0));
    if (warm_support && !warm_support->empty()) {
        Support w;
        for (auto t : *warm_support)
            if (t < L) w.push_back(t);
        x = fit(meas, w, &ops);
        x = hard_threshold(x, S);
    }
    CVec r = sub(meas.y_bar, meas.phi.apply(x, &ops));
    double u = norm(r, &ops);
    RVec history{u};
    int iters = 0;
    for (int k = 1; k <= max_iters && u >= tol; ++k) {
        const CVec proxy = meas.phi.apply_adjoint(r, &ops);
        const Support omega = top_k_support(proxy, 2 * S);
        // Current support first (strongest first), then new candidates by proxy magnitude.
        Support order = by_magnitude(x, nonzero_support(x));
        Support fresh;
        for (auto t : omega)
            if (x[t] == cplx(0.0, 0.0)) fresh.push_back(t);
        for (auto t : by_magnitude(proxy, fresh)) order.push_back(t);

        CVec xn = hard_threshold(fit(meas, order, &ops), S);
        CVec rn = sub(meas.y_bar, meas.phi.apply(xn, &ops));
        const double un = norm(rn, &ops);
        iters = k;
        if (opt.stop_on_no_decrease && un >= u - tol && un >= tol) break;
        x = std::move(xn);
        r = std::move(rn);
        u = un;
        history.push_back(u);
    }
    ChannelEstimate e = estimate_from_coeffs(x, M);
    e.iterations_used = iters;
    e.ops = ops;
    e.residuals = std::move(history);
    e.under_observed = meas.under_observed || meas.G_hat() < S;
    return e;
}

}  // namespace tdsce
