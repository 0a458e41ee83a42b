#include "kptau/schur.hpp"

#include <stdexcept>

namespace kptau {

namespace {

// n g_n = sum_{k=1}^{n} sign^{k-1} k t_k g_{n-k}, the common recursion for
// the h (sign=+1) and e (sign=-1) generators.
std::vector<TimesSeries> generators_up_to(int n_max, int num_vars, int sign)
{
    std::vector<TimesSeries> g;
    g.reserve(static_cast<std::size_t>(n_max) + 1);
    g.push_back(TimesSeries::constant(1, num_vars, n_max));
    for (int n = 1; n <= n_max; ++n) {
        TimesSeries acc(num_vars, n_max);
        for (int k = 1; k <= n; ++k) {
            Rational c(k, n);
            if (sign < 0 && k % 2 == 0) {
                c = -c;
            }
            acc += c * multiply_by_time(g[static_cast<std::size_t>(n - k)], k);
        }
        g.push_back(std::move(acc));
    }
    return g;
}

TimesSeries det_series(const std::vector<std::vector<TimesSeries>>& m,
                       std::vector<int> cols, int row, int num_vars, int max_weight)
{
    if (cols.empty()) {
        return TimesSeries::constant(1, num_vars, max_weight);
    }
    TimesSeries acc(num_vars, max_weight);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const TimesSeries& entry = m[static_cast<std::size_t>(row)]
                                    [static_cast<std::size_t>(cols[i])];
        if (entry.is_zero()) {
            continue;
        }
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j != i) {
                rest.push_back(cols[j]);
            }
        }
        TimesSeries minor = det_series(m, std::move(rest), row + 1, num_vars, max_weight);
        minor = entry * minor;
        if (i % 2 == 1) {
            minor *= Rational(-1);
        }
        acc += minor;
    }
    return acc;
}

}  // namespace

std::vector<TimesSeries> complete_homogeneous_up_to(int n_max, int num_vars)
{
    return generators_up_to(n_max, num_vars, +1);
}

std::vector<TimesSeries> elementary_up_to(int n_max, int num_vars)
{
    return generators_up_to(n_max, num_vars, -1);
}

TimesSeries schur_poly(const Partition& lambda, int num_vars, int max_weight)
{
    if (lambda.weight() > max_weight) {
        throw std::invalid_argument("schur_poly: |lambda| exceeds max_weight");
    }
    // Jacobi-Trudi on h has size l(lambda); the dual on e has size lambda_1.
    const bool dual = lambda.length() > lambda.part(1);
    const Partition& mu = dual ? lambda.conjugate() : lambda;
    const int size = mu.length();
    const auto gen = dual ? elementary_up_to(lambda.weight(), num_vars)
                          : complete_homogeneous_up_to(lambda.weight(), num_vars);

    std::vector<std::vector<TimesSeries>> m(
        static_cast<std::size_t>(size),
        std::vector<TimesSeries>(static_cast<std::size_t>(size)));
    for (int a = 1; a <= size; ++a) {
        for (int b = 1; b <= size; ++b) {
            const int idx = mu.part(a) - a + b;
            m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
                (idx >= 0 && idx <= lambda.weight())
                    ? gen[static_cast<std::size_t>(idx)]
                    : TimesSeries(num_vars, lambda.weight());
        }
    }
    std::vector<int> cols(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        cols[static_cast<std::size_t>(i)] = i;
    }
    TimesSeries det = det_series(m, std::move(cols), 0, num_vars, lambda.weight());
    return det.truncated(max_weight);
}

}  // namespace kptau
