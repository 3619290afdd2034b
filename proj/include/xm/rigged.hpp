#pragma once

#include "xm/crystal.hpp"
#include "xm/partition.hpp"
#include "xm/qseries.hpp"

#include <vector>

namespace xm {

/*
 * Configuration: one partition per classical Dynkin node. nu[a-1] is the
 * color-a partition.
 */
struct Configuration {
    TensorSpec spec;
    std::vector<Partition> nu;
    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;
};

Configuration empty_configuration(const TensorSpec& spec);

/*
 * Rigged configuration: a configuration plus one integer label per row.
 * riggings[a][k] belongs to the k-th part of nu[a]. Canonical form keeps
 * the labels weakly decreasing within each block of equal-length rows,
 * which makes equality and duplicate-free enumeration well defined.
 */
struct RiggedConfiguration {
    Configuration config;
    std::vector<std::vector<int>> riggings;
    bool operator==(const RiggedConfiguration&) const = default;
    auto operator<=>(const RiggedConfiguration&) const = default;
};

RiggedConfiguration empty_rc(const TensorSpec& spec);

// Sorts each equal-length block of labels into weakly decreasing order.
void canonicalize_riggings(RiggedConfiguration& rc);

// Structural validation: alignment, rigging bounds 0 <= J <= vacancy,
// canonical label order. Throws std::domain_error on violation.
void validate_rc(const RiggedConfiguration& rc);

/*
 * Vacancy number p_i^(a) of the configuration, via the explicit column
 * formulas (Q_i is the column count of a partition, L the tensor length):
 *   A: Q_i(nu^(a-1)) - 2 Q_i(nu^(a)) + Q_i(nu^(a+1)) + L [a=1],
 *      with nu^(0) = nu^(n+1) = empty.
 *   D: the same through color n-3 (plus the L term at a=1);
 *      a = n-2 additionally collects Q_i(nu^(n-1)) + Q_i(nu^(n));
 *      the spin colors see only their neighbor:
 *      p_i^(n-1) = Q_i(nu^(n-2)) - 2 Q_i(nu^(n-1)) and likewise for n.
 * Colors are 1-based; i >= 1.
 */
long vacancy(const Configuration& c, int a, int i);

// The unique weight lambda whose row-size constraints the configuration
// satisfies:
//   A: |nu^(a)| = L - (lambda_1 + ... + lambda_a),
//   D: the same for a <= n-2, plus the spin equations
//      |nu^(n-1)| = (L - lambda_1 - ... - lambda_{n-1} + lambda_n)/2,
//      |nu^(n)|   = (L - lambda_1 - ... - lambda_n)/2.
// Inverting the size equations is integral in both families.
Weight weight_of_configuration(const Configuration& c);

// Admissible for lambda: the weight matches and every vacancy number is
// nonnegative. It suffices to check i = 1 .. largest part per color: each
// p^(a) is concave in i between consecutive parts of nu^(a) and weakly
// increasing beyond the largest one, so interior lengths and the tail
// cannot dip below the checked values.
bool is_admissible(const Configuration& c, const Weight& lambda);

// cc(nu) = 1/2 sum_{a,b} (alpha_a|alpha_b) sum_{j,k} min(j,k) m_j^(a) m_k^(b),
// over distinct part lengths j, k with multiplicities m. Integral because
// the double sum is symmetric with even diagonal.
long long cocharge_config(const Configuration& c);

// cc(nu, J) = cc(nu) + sum of all labels.
long long cocharge(const RiggedConfiguration& rc);

// All admissible configurations for lambda. Row sizes are forced by the
// size equations before any partition is generated; the result is ordered
// lexicographically on the tuple of partitions. A weight whose forced
// sizes are negative or (type D) non-integral yields the empty list.
std::vector<Configuration> enumerate_configurations(const TensorSpec& spec, const Weight& lambda);

// All rigged configurations: per admissible configuration, the labels of
// each block of m rows of length i range over partitions in the
// p_i^(a) x m box. Canonically ordered.
std::vector<RiggedConfiguration> enumerate_rc(const TensorSpec& spec, const Weight& lambda);

// M(B, lambda; q) = sum over admissible configurations of q^{cc(nu)} times
// the product over blocks of the Gaussian binomial [p_i^(a) + m_i^(a),
// m_i^(a)]_q. Exponents are nonnegative.
Laurent fermionic_M(const TensorSpec& spec, const Weight& lambda);

// Complements every block of labels in its vacancy x multiplicity
// rectangle. Involutive; fixes the underlying configuration.
RiggedConfiguration complement(const RiggedConfiguration& rc);

// One-line text form, rows as "len[label]"; with show_vacancies, rows print
// as "len[label/vacancy]" the way the step tables are usually displayed.
std::string rc_str(const RiggedConfiguration& rc, bool show_vacancies = false);

}  // namespace xm
