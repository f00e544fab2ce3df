#include "tdsce/estimator/pa_iht.hpp"

#include <algorithm>
#include <numeric>

#include "tdsce/numerics/least_squares.hpp"

namespace tdsce {

std::string to_string(EstimateStatus s) {
    switch (s) {
        case EstimateStatus::Ok: return "ok";
        case EstimateStatus::Diverged: return "diverged";
        case EstimateStatus::Failed: return "failed";
    }
    return "unknown";
}

ChannelEstimate estimate_from_coeffs(std::span<const cplx> x, std::size_t M) {
    if (x.size() > M) throw Error("dimension mismatch");
    ChannelEstimate e;
    e.dense.assign(M, cplx(0.0, 0.0));
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (x[t] == cplx(0.0, 0.0)) continue;
        e.support.push_back(t);
        e.gains.push_back(x[t]);
        e.dense[t] = x[t];
    }
    return e;
}

ChannelEstimate pa_iht(const Measurement& meas, const CoarsePriors& priors, PaIhtOptions opt) {
    const std::size_t L = meas.L_hat();
    const std::size_t M = priors.h_bar_prime.size();
    if (M < L) throw Error("coarse gains missing");
    const std::size_t S = std::min(priors.S, L);
    const auto& phi = meas.phi;
    OpCounter ops;

    CVec prior(priors.h_bar_prime.begin(), priors.h_bar_prime.begin() + static_cast<std::ptrdiff_t>(L));
    CVec x(L, cplx(0.0, 0.0));
    for (auto d : priors.D0)
        if (d < L) x[d] = prior[d];

    const double tol = opt.tol >= 0.0 ? opt.tol : 1e-8 * norm(meas.y_bar);
    auto residual = [&](const CVec& v) { return sub(meas.y_bar, phi.apply(v, &ops)); };

    CVec r = residual(x);
    double u = norm(r, &ops);
    RVec history{u};
    int iters = 0;
    for (int k = 1; k <= opt.max_iters && u >= tol; ++k) {
        CVec z = phi.apply_adjoint(r, &ops);
        for (std::size_t t = 0; t < L; ++t) z[t] += x[t];
        count_add(&ops, L);
        CVec xn = x;
        for (auto g : top_k_support(z, S)) xn[g] = prior[g];
        xn = hard_threshold(xn, S);
        CVec rn = residual(xn);
        const double un = norm(rn, &ops);
        iters = k;
        if (un < tol || u - un > tol) {
            x = std::move(xn);
            r = std::move(rn);
            u = un;
            history.push_back(u);
            continue;
        }
        break;
    }

    ChannelEstimate e = estimate_from_coeffs(x, M);
    e.iterations_used = iters;
    e.ops = ops;
    e.residuals = std::move(history);
    e.under_observed = meas.under_observed;
    return e;
}

ChannelEstimate ml_refine(const Measurement& meas, const Support& D, std::size_t M, OpCounter* ops) {
    if (D.empty()) throw Error("empty support");
    OpCounter local;
    CMatrix a = meas.phi.columns(D);
    LsSolution sol;
    try {
        sol = least_squares(a, meas.y_bar, &local);
    } catch (const Error&) {
        if (ops) ops->mul(local.mults);
        throw Error("singular support");
    }
    CVec x(meas.L_hat(), cplx(0.0, 0.0));
    for (std::size_t k = 0; k < D.size(); ++k) x[D[k]] = sol.coeffs[k];
    ChannelEstimate e = estimate_from_coeffs(x, M);
    // Keep exact zeros from the solve on the reported support.
    e.support = D;
    e.gains = sol.coeffs;
    e.ops = local;
    e.under_observed = meas.under_observed;
    e.residuals = {sol.residual_norm};
    if (ops) ops->mul(local.mults);
    return e;
}

ChannelEstimate ml_refine_ranked(const Measurement& meas, const ChannelEstimate& detected, std::size_t M,
                                 OpCounter* ops) {
    Support order(detected.support.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::norm(detected.gains[a]) > std::norm(detected.gains[b]);
    });
    if (order.size() > meas.G_hat()) order.resize(meas.G_hat());
    Support cols;
    for (auto k : order) cols.push_back(detected.support[k]);
    if (cols.empty()) throw Error("empty support");

    OpCounter local;
    CMatrix a = meas.phi.columns(cols);
    LsSolution sol = least_squares(a, meas.y_bar, &local, {.drop_dependent = true});
    CVec x(meas.L_hat(), cplx(0.0, 0.0));
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (sol.kept[k]) x[cols[k]] = sol.coeffs[k];
    ChannelEstimate e = estimate_from_coeffs(x, M);
    e.ops = local;
    e.under_observed = meas.under_observed || detected.support.size() > meas.G_hat();
    e.residuals = {sol.residual_norm};
    if (ops) ops->mul(local.mults);
    return e;
}

double crlb(double S, double G, double R_g2, double snr_linear) {
    if (!(S > 0) || !(G > 0) || !(R_g2 > 0) || !(snr_linear > 0)) throw Error("crlb arguments must be positive");
    return S / (2.0 * R_g2 * G * snr_linear);
}

}  // namespace tdsce
