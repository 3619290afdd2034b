#include "xm/energy.hpp"

#include <cstdlib>
#include <stdexcept>

namespace xm {

namespace {

// Rank of a letter along the crystal order; n and n-bar share a level.
int order_level(Letter b, const CartanType& t) {
    const int n = t.rank;
    if (t.family == Family::A) return b.value;
    const int k = std::abs(b.value);
    if (k == n) return n;
    return b.value > 0 ? k : 2 * n - k;
}

}  // namespace

bool letter_greater(Letter b, Letter b2, const CartanType& t) {
    if (t.family == Family::D && std::abs(b.value) == t.rank &&
        std::abs(b2.value) == t.rank && b.value != b2.value)
        return false;  // n vs n-bar: incomparable
    return order_level(b, t) > order_level(b2, t);
}

int local_energy(Letter b, Letter b2, const CartanType& t) {
    if (!letter_valid(b, t) || !letter_valid(b2, t))
        throw std::domain_error("local_energy: letter outside the alphabet");
    if (t.family == Family::A) return letter_greater(b, b2, t) ? -1 : 0;
    const int n = t.rank;
    if ((b.value == n && b2.value == -n) || (b.value == -n && b2.value == n)) return -1;
    if (b.value == -1 && b2.value == 1) return -2;
    return letter_greater(b, b2, t) ? -1 : 0;
}

long long energy(const Path& p) {
    const int L = static_cast<int>(p.factors.size());
    long long total = 0;
    // b_j is factors[L-j]; the pair (b_{j+1}, b_j) sits at (L-j-1, L-j)
    for (int j = 1; j <= L - 1; ++j) {
        const Letter left = p.factors[static_cast<size_t>(L - j - 1)];
        const Letter right = p.factors[static_cast<size_t>(L - j)];
        total += static_cast<long long>(L - j) * local_energy(left, right, p.spec.type);
    }
    return total;
}

long long energy_su2(const Path& p) {
    if (p.spec.type.family != Family::A || p.spec.type.rank != 1)
        throw std::domain_error("energy_su2: defined for type A rank 1 only");
    const int L = static_cast<int>(p.factors.size());
    long long total = 0;
    for (int j = 1; j <= L - 1; ++j) {
        const int left = p.factors[static_cast<size_t>(L - j - 1)].value;
        const int right = p.factors[static_cast<size_t>(L - j)].value;
        if (left > right) total += L - j;
    }
    return total;
}

Laurent one_dim_sum(const TensorSpec& spec, const Weight& lambda) {
    Laurent x;
    for (const Path& p : enumerate_paths(spec, lambda)) x.add_term(energy(p), 1);
    return x;
}

}  // namespace xm
