#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdsce {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using RVec = std::vector<double>;

// Single exception type; the message carries the failure class.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Complex multiplication / addition tally.
struct OpCounter {
    std::uint64_t mults = 0;
    std::uint64_t adds = 0;

    void mul(std::uint64_t n) { mults += n; }
    void add(std::uint64_t n) { adds += n; }
    void reset() { mults = adds = 0; }
};

inline void count_mul(OpCounter* ops, std::uint64_t n) {
    if (ops) ops->mul(n);
}
inline void count_add(OpCounter* ops, std::uint64_t n) {
    if (ops) ops->add(n);
}

}  // namespace tdsce
