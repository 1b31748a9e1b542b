#ifndef QHJ_TEST_HELPERS_HPP
#define QHJ_TEST_HELPERS_HPP

#include <cmath>
#include <complex>
#include <random>

#include "qhj/scenario.hpp"

namespace qhjtest {

using qhj::cplx;

inline qhj::Superposition case1() { return qhj::preset_case1().superposition(); }
inline qhj::Superposition case2() { return qhj::preset_case2().superposition(); }

inline double rel_err(cplx got, cplx want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// Central finite difference of an analytic function along the real axis of z.
template <typename F>
cplx fd_dz(F f, cplx z, double h = 1e-5) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace qhjtest

#endif
