#include "hedgenash/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hedgenash {

std::int64_t iterations_for_theta(int n, double alpha, double theta) {
    if (n < 1) throw std::invalid_argument("iterations_for_theta: n must be >= 1");
    if (!(alpha > 0.0) || !(theta > 0.0)) {
        throw std::invalid_argument("iterations_for_theta: alpha and theta must be positive");
    }
    const double raw = (n * std::exp(-1.0) + 1.0 + alpha) / (alpha * theta);
    return static_cast<std::int64_t>(std::floor(raw));
}

double mylove_bound(int n, double alpha, std::int64_t K) {
    if (n < 1) throw std::invalid_argument("mylove_bound: n must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("mylove_bound: alpha must be positive");
    if (K < 0) throw std::invalid_argument("mylove_bound: K must be >= 0");
    const double kp1 = static_cast<double>(K) + 1.0;
    const double ratio = (static_cast<double>(K) + 2.0) / kp1;
    return n * std::exp(-1.0) / (alpha * kp1) + 1.0 / kp1 + ratio * n * std::expm1(alpha) +
           ratio * n * std::pow(kRho, static_cast<double>(K));
}

FptasSchedule build_schedule(int n, double eps) {
    if (n < 1) throw std::invalid_argument("build_schedule: n must be >= 1");
    if (!(eps > 0.0) || eps > 1.0) {
        throw std::invalid_argument("build_schedule: eps must lie in (0, 1]");
    }

    const double alpha_hat = std::log1p(eps / (3.0 * n));
    const std::int64_t k_hat = iterations_for_theta(n, alpha_hat, eps / 3.0);

    const double ratio_hat =
        (static_cast<double>(k_hat) + 2.0) / (static_cast<double>(k_hat) + 1.0);
    const double eps_prime = 3.0 * eps / (2.0 * ratio_hat + 1.0);

    const double alpha = std::log1p(eps_prime / (3.0 * n));
    const double theta = eps_prime / 3.0;
    const std::int64_t K = iterations_for_theta(n, alpha, theta);
    const std::int64_t k_prime = static_cast<std::int64_t>(
        std::ceil(std::log(eps_prime / (3.0 * n)) / std::log(kRho)));

    const double ratio = (static_cast<double>(K) + 2.0) / (static_cast<double>(K) + 1.0);
    const double predicted_error = ratio * (2.0 * eps_prime / 3.0) + eps_prime / 3.0;

    if (!(K >= k_hat && k_hat >= k_prime)) {
        throw std::runtime_error("build_schedule: budget ordering K >= k_hat >= k_prime failed at n=" +
                                 std::to_string(n) + " eps=" + std::to_string(eps) + " (K=" +
                                 std::to_string(K) + ", k_hat=" + std::to_string(k_hat) +
                                 ", k_prime=" + std::to_string(k_prime) + ")");
    }
    if (!(predicted_error <= eps + 1e-12)) {
        throw std::runtime_error("build_schedule: predicted error " + std::to_string(predicted_error) +
                                 " exceeds target " + std::to_string(eps));
    }

    return FptasSchedule{n, eps, k_hat, eps_prime, alpha, theta, K, k_prime, kRho, predicted_error};
}

}  // namespace hedgenash
