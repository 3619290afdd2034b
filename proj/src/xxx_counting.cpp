#include "xm/xxx_counting.hpp"

#include "xm/checked.hpp"

#include <stdexcept>

namespace xm {

long long binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long result = 1;
    for (long long k = 1; k <= b; ++k) {
        // exact at every step: result * (a-b+k) is divisible by k
        result = checked_mul(result, a - b + k) / k;
    }
    return result;
}

long p_ell(const StringConfiguration& sc, int ell) {
    if (ell < 1) throw std::invalid_argument("p_ell: length must be positive");
    // sum_{l'} min(l, l') m_{l'} is the column count Q_l
    return sc.sites - 2 * sc.nu.column_count(ell);
}

long long count_for_configuration(const StringConfiguration& sc) {
    long long product = 1;
    const auto& parts = sc.nu.parts();
    size_t k = 0;
    while (k < parts.size()) {
        size_t end = k;
        while (end < parts.size() && parts[end] == parts[k]) ++end;
        const long p = p_ell(sc, parts[k]);
        if (p < 0) throw std::domain_error("inadmissible string configuration: negative vacancy");
        const long long mult = static_cast<long long>(end - k);
        product = checked_mul(product, binomial(p + mult, mult));
        k = end;
    }
    return product;
}

std::vector<StringConfiguration> string_configurations(int sites, int down) {
    if (sites < 1) throw std::invalid_argument("string_configurations: need at least one site");
    if (down < 0 || 2 * down > sites)
        throw std::invalid_argument("string_configurations: down spins must satisfy 0 <= n <= N/2");
    std::vector<StringConfiguration> out;
    for (Partition& nu : partitions_of(down)) {
        StringConfiguration sc{std::move(nu), sites};
        bool admissible = true;
        for (int part : sc.nu.parts()) {
            if (p_ell(sc, part) < 0) {
                admissible = false;
                break;
            }
        }
        if (admissible) out.push_back(std::move(sc));
    }
    return out;
}

long long count_total(int sites, int down) {
    long long total = 0;
    for (const StringConfiguration& sc : string_configurations(sites, down))
        total = checked_add(total, count_for_configuration(sc));
    return total;
}

}  // namespace xm
