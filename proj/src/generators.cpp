#include "hedgenash/generators.hpp"

#include <stdexcept>
#include <vector>

#include "hedgenash/rng.hpp"

namespace hedgenash {

Family family_from_string(std::string_view name) {
    if (name == "rps") return Family::rps;
    if (name == "random_uniform") return Family::random_uniform;
    if (name == "doubly_symmetric") return Family::doubly_symmetric;
    if (name == "symmetric_zero_sum") return Family::symmetric_zero_sum;
    if (name == "coordination") return Family::coordination;
    throw std::invalid_argument("unknown game family: " + std::string(name));
}

const char* to_string(Family family) {
    switch (family) {
        case Family::rps: return "rps";
        case Family::random_uniform: return "random_uniform";
        case Family::doubly_symmetric: return "doubly_symmetric";
        case Family::symmetric_zero_sum: return "symmetric_zero_sum";
        case Family::coordination: return "coordination";
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string make_label(const GeneratorSpec& spec) {
    std::string label = std::string(to_string(spec.family)) + "_n" + std::to_string(spec.n);
    if (spec.family == Family::random_uniform || spec.family == Family::doubly_symmetric ||
        spec.family == Family::symmetric_zero_sum) {
        label += "_s" + std::to_string(spec.seed);
    }
    return label;
}

std::vector<double> random_matrix(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> m(static_cast<size_t>(n) * n);
    for (double& v : m) v = rng.uniform01();
    return m;
}

}  // namespace

SymmetricGame generate(const GeneratorSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
    const size_t nn = static_cast<size_t>(n) * n;

    switch (spec.family) {
        case Family::rps: {
            if (n < 3 || n % 2 == 0) {
                throw std::invalid_argument("generate: rps requires odd n >= 3");
            }
            std::vector<double> m(nn, 0.0);
            const int wins = (n - 1) / 2;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const int d = ((i - j) % n + n) % n;
                    double v = 0.0;
                    if (d == 0) v = 0.5;
                    else if (d <= wins) v = 1.0;
                    m[static_cast<size_t>(i) * n + j] = v;
                }
            }
            return SymmetricGame(n, std::move(m), make_label(spec));
        }
        case Family::random_uniform:
            return SymmetricGame(n, random_matrix(n, spec.seed), make_label(spec));
        case Family::doubly_symmetric: {
            std::vector<double> m = random_matrix(n, spec.seed);
            std::vector<double> sym(nn);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    sym[static_cast<size_t>(i) * n + j] =
                        (m[static_cast<size_t>(i) * n + j] + m[static_cast<size_t>(j) * n + i]) / 2.0;
                }
            }
            return normalize(n, sym, make_label(spec));
        }
        case Family::symmetric_zero_sum: {
            std::vector<double> m = random_matrix(n, spec.seed);
            std::vector<double> g(nn);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const double skew =
                        (m[static_cast<size_t>(i) * n + j] - m[static_cast<size_t>(j) * n + i]) / 2.0;
                    g[static_cast<size_t>(i) * n + j] = 0.5 + skew;
                }
            }
            return SymmetricGame(n, std::move(g), make_label(spec));
        }
        case Family::coordination: {
            std::vector<double> m(nn, 0.0);
            for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1.0;
            return SymmetricGame(n, std::move(m), make_label(spec));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace hedgenash
