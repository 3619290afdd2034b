#pragma once

#include "xm/partition.hpp"

#include <vector>

namespace xm {

/*
 * String configuration of the spin-1/2 chain: the string lengths form a
 * partition nu (the multiplicity of length l is the number of l-strings),
 * on a chain of `sites` spins. |nu| is the number of down spins.
 */
struct StringConfiguration {
    Partition nu;
    int sites = 0;
    bool operator==(const StringConfiguration&) const = default;
};

// Vacancy number P_l = N - 2 sum_{l'} min(l, l') m_{l'}. May be negative,
// in which case the configuration is inadmissible.
long p_ell(const StringConfiguration& sc, int ell);

// Number of highest weight states with these string contents:
// prod_l binomial(P_l + m_l, m_l). Throws std::domain_error when some
// P_l < 0 at an occupied length.
long long count_for_configuration(const StringConfiguration& sc);

// Admissible string configurations with n down spins on N sites,
// in lexicographic partition order.
std::vector<StringConfiguration> string_configurations(int sites, int down);

// Total count over all admissible configurations. Requires
// 0 <= down <= sites/2 (the highest weight regime).
long long count_total(int sites, int down);

// Exact binomial coefficient with 64-bit overflow detection.
long long binomial(long long a, long long b);

}  // namespace xm
