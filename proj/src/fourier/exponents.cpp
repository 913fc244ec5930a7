#include "vinlab/fourier/exponents.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinlab::fourier {

double sigma_pd(double p, int d) {
    if (d < 2) throw std::domain_error("sigma_pd: need d >= 2");
    if (!(p >= 2.0)) throw std::domain_error("sigma_pd: need p >= 2");
    double best = 1e300;
    for (int k = 2; k <= d; ++k) {
        const double kk = static_cast<double>(k);
        best = std::min(best, 1.0 / kk + (kk * kk - kk - 2.0) / (2.0 * kk * p));
    }
    return best;
}

double critical_p_bound(int d) {
    if (d < 5) throw std::domain_error("critical_p_bound: defined for d >= 5");
    double best = 1e300;
    for (int k = 5; k <= d; ++k) {
        const double kk = static_cast<double>(k);
        best = std::min(best, 2.0 * (kk * kk - 2.0 * kk - 2.0) / (kk - 4.0));
    }
    return best;
}

}  // namespace vinlab::fourier
