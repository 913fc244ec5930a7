#pragma once

namespace vinlab::fourier {

/// sigma_{p,d} = min_{2 <= k <= d} (1/k + (k^2 - k - 2) / (2 k p)).
double sigma_pd(double p, int d);

/// min_{5 <= k <= d} 2 (k^2 - 2k - 2) / (k - 4); the ceiling this places on
/// the critical exponent is 22, attained at k = 6 and k = 7.
double critical_p_bound(int d);

}  // namespace vinlab::fourier
