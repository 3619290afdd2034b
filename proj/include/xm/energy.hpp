#pragma once

#include "xm/crystal.hpp"
#include "xm/qseries.hpp"

namespace xm {

// Strict crystal comparison b > b2. Type A letters are totally ordered by
// value. Type D letters follow 1 < ... < n-1 < {n, n-bar} < (n-1)-bar <
// ... < 1-bar with n and n-bar incomparable (neither is less).
bool letter_greater(Letter b, Letter b2, const CartanType& t);

/*
 * Local energy H on pairs of adjacent tensor factors, normalized by
 * H(1 (x) 1) = 0. Closed form on the level-1 crystal:
 *   A: H(b (x) b2) = -1 if b > b2, else 0.
 *   D: 0 if b <= b2; -2 if b (x) b2 = 1-bar (x) 1; -1 if b (x) b2 is
 *      n (x) n-bar or n-bar (x) n, or b > b2 otherwise.
 * The incomparable pair {n, n-bar} never reaches the generic comparison:
 * it is handled by its own case.
 */
int local_energy(Letter b, Letter b2, const CartanType& t);

// E(b_L (x) ... (x) b_1) = sum_{j=1}^{L-1} (L-j) H(b_{j+1} (x) b_j), with
// factors numbered right to left. Nonpositive by construction of H.
long long energy(const Path& p);

// Positive-convention energy for type A rank 1 words in letters {1, 2}:
// sum_{j=1}^{L-1} (L-j) [p_{j+1} > p_j]. Computed directly from descents
// (not via H), and equal to -energy(p). Throws std::domain_error for any
// other type.
long long energy_su2(const Path& p);

// One-dimensional sum X(B, lambda; q) = sum over classically highest
// weight paths of q^{E(b)}. All exponents are <= 0 in this convention.
Laurent one_dim_sum(const TensorSpec& spec, const Weight& lambda);

}  // namespace xm
