#pragma once

#include <cstdint>

namespace hedgenash {

// Decay base of the geometric tail term in the averaged error bound.
inline constexpr double kRho = 0.5;

// Parameter bundle that drives a fixed-rate run toward a target
// approximation error eps_target:
//
//   k_hat       iteration lower bound, evaluated at eps_target
//   eps_prime   solves ((k_hat+2)/(k_hat+1))*(2e'/3) + e'/3 = eps_target
//   alpha       ln(1 + eps_prime/(3n)), so n(e^alpha - 1) = eps_prime/3
//   theta       eps_prime/3, the bound's vanishing-term budget
//   K           final iteration budget, evaluated at eps_prime
//   k_prime     first K with n*rho^K <= eps_prime/3
//
// predicted_error = ((K+2)/(K+1))*(2*eps_prime/3) + eps_prime/3 <= eps_target.
struct FptasSchedule {
    int n = 0;
    double eps_target = 0.0;
    std::int64_t k_hat = 0;
    double eps_prime = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
    std::int64_t K = 0;
    std::int64_t k_prime = 0;
    double rho = kRho;
    double predicted_error = 0.0;
};

// floor((n*exp(-1) + 1 + alpha) / (alpha*theta)).
std::int64_t iterations_for_theta(int n, double alpha, double theta);

// Right-hand side of the averaged-error relation at iteration K:
//   n*exp(-1)/(alpha*(K+1)) + 1/(K+1)
//     + ((K+2)/(K+1))*n*(e^alpha - 1) + ((K+2)/(K+1))*n*rho^K.
double mylove_bound(int n, double alpha, std::int64_t K);

// Builds the full schedule for (n, eps), eps in (0, 1]. Throws if the
// computed budgets ever fail K >= k_hat >= k_prime or the predicted error
// exceeds eps; neither happens on sane inputs, but the ordering is a claimed
// property rather than a proved one, so it is checked.
FptasSchedule build_schedule(int n, double eps);

}  // namespace hedgenash
