#pragma once

#include "kptau/partition.hpp"
#include "kptau/times_series.hpp"

#include <vector>

namespace kptau {

// Symmetric functions in the times normalization p_k = k t_k. The complete
// homogeneous generators are defined by sum_n h_n z^n = exp(sum_k t_k z^k);
// h_n is weight-homogeneous of weight n.

/// h_0 .. h_n_max, each carried to max_weight = n_max.
std::vector<TimesSeries> complete_homogeneous_up_to(int n_max, int num_vars);

/// Elementary generators e_0 .. e_n_max (sum_n e_n z^n = exp(sum_k (-1)^{k-1} t_k z^k)).
std::vector<TimesSeries> elementary_up_to(int n_max, int num_vars);

/// Schur polynomial s_lambda by Jacobi-Trudi (or its dual, whichever gives
/// the smaller determinant). Weight-homogeneous of weight |lambda|.
TimesSeries schur_poly(const Partition& lambda, int num_vars, int max_weight);

}  // namespace kptau
