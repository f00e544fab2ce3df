#include "tdsce/numerics/select.hpp"

#include <algorithm>
#include <numeric>

#include "tdsce/numerics/linalg.hpp"

namespace tdsce {

Support top_k_support(std::span<const double> magnitude, std::size_t k) {
    if (magnitude.empty()) throw Error("empty vector");
    k = std::min(k, magnitude.size());
    Support idx(magnitude.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto before = [&](std::size_t a, std::size_t b) {
        if (magnitude[a] != magnitude[b]) return magnitude[a] > magnitude[b];
        return a < b;
    };
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(), before);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

Support top_k_support(std::span<const cplx> x, std::size_t k) {
    const RVec m = magnitudes2(x);
    return top_k_support(std::span<const double>(m), k);
}

CVec hard_threshold(std::span<const cplx> x, std::size_t k) {
    CVec out(x.size(), cplx(0.0, 0.0));
    if (k == 0 || x.empty()) return out;
    for (std::size_t i : top_k_support(x, k)) out[i] = x[i];
    return out;
}

Support nonzero_support(std::span<const cplx> x) {
    Support s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != cplx(0.0, 0.0)) s.push_back(i);
    return s;
}

Support support_union(const Support& a, const Support& b) {
    Support out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace tdsce
