#include "xm/rigged.hpp"

#include "xm/checked.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace xm {

Configuration empty_configuration(const TensorSpec& spec) {
    return Configuration{spec, std::vector<Partition>(static_cast<size_t>(spec.type.rank))};
}

RiggedConfiguration empty_rc(const TensorSpec& spec) {
    return RiggedConfiguration{empty_configuration(spec),
                               std::vector<std::vector<int>>(static_cast<size_t>(spec.type.rank))};
}

void canonicalize_riggings(RiggedConfiguration& rc) {
    for (size_t a = 0; a < rc.riggings.size(); ++a) {
        const auto& parts = rc.config.nu[a].parts();
        auto& rig = rc.riggings[a];
        size_t k = 0;
        while (k < parts.size()) {
            size_t end = k;
            while (end < parts.size() && parts[end] == parts[k]) ++end;
            std::sort(rig.begin() + static_cast<long>(k), rig.begin() + static_cast<long>(end),
                      std::greater<int>());
            k = end;
        }
    }
}

void validate_rc(const RiggedConfiguration& rc) {
    const int n = rc.config.spec.type.rank;
    if (static_cast<int>(rc.config.nu.size()) != n ||
        static_cast<int>(rc.riggings.size()) != n)
        throw std::domain_error("rigged configuration: wrong number of colors");
    for (int a = 1; a <= n; ++a) {
        const auto& part = rc.config.nu[static_cast<size_t>(a - 1)];
        const auto& rig = rc.riggings[static_cast<size_t>(a - 1)];
        if (static_cast<int>(rig.size()) != part.num_parts())
            throw std::domain_error("rigged configuration: labels misaligned with rows");
        for (int k = 0; k < part.num_parts(); ++k) {
            const int len = part.part(k);
            const long cap = vacancy(rc.config, a, len);
            if (rig[static_cast<size_t>(k)] < 0 || rig[static_cast<size_t>(k)] > cap)
                throw std::domain_error("rigged configuration: label outside its rectangle");
            if (k > 0 && part.part(k - 1) == len &&
                rig[static_cast<size_t>(k - 1)] < rig[static_cast<size_t>(k)])
                throw std::domain_error("rigged configuration: labels not in canonical order");
        }
    }
}

long vacancy(const Configuration& c, int a, int i) {
    const int n = c.spec.type.rank;
    if (a < 1 || a > n) throw std::domain_error("vacancy: color out of range");
    if (i < 1) throw std::domain_error("vacancy: length must be positive");
    const auto Q = [&](int color) -> long {
        if (color < 1 || color > n) return 0;
        return c.nu[static_cast<size_t>(color - 1)].column_count(i);
    };
    const long L = c.spec.length;
    const long source = (a == 1) ? L : 0;
    if (c.spec.type.family == Family::A)
        return Q(a - 1) - 2 * Q(a) + Q(a + 1) + source;
    if (a <= n - 3) return Q(a - 1) - 2 * Q(a) + Q(a + 1) + source;
    if (a == n - 2) return Q(n - 3) - 2 * Q(n - 2) + Q(n - 1) + Q(n) + source;
    if (a == n - 1) return Q(n - 2) - 2 * Q(n - 1);
    return Q(n - 2) - 2 * Q(n);
}

Weight weight_of_configuration(const Configuration& c) {
    const int n = c.spec.type.rank;
    const int L = c.spec.length;
    if (static_cast<int>(c.nu.size()) != n)
        throw std::domain_error("configuration: wrong number of colors");
    std::vector<int> s(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) s[static_cast<size_t>(a)] = c.nu[static_cast<size_t>(a)].size();
    Weight w = zero_weight(c.spec.type);
    if (c.spec.type.family == Family::A) {
        w.coords[0] = L - s[0];
        for (int a = 2; a <= n; ++a)
            w.coords[static_cast<size_t>(a - 1)] =
                s[static_cast<size_t>(a - 2)] - s[static_cast<size_t>(a - 1)];
        w.coords[static_cast<size_t>(n)] = s[static_cast<size_t>(n - 1)];
        return w;
    }
    w.coords[0] = L - s[0];
    for (int a = 2; a <= n - 2; ++a)
        w.coords[static_cast<size_t>(a - 1)] =
            s[static_cast<size_t>(a - 2)] - s[static_cast<size_t>(a - 1)];
    w.coords[static_cast<size_t>(n - 2)] =
        s[static_cast<size_t>(n - 3)] - s[static_cast<size_t>(n - 2)] - s[static_cast<size_t>(n - 1)];
    w.coords[static_cast<size_t>(n - 1)] =
        s[static_cast<size_t>(n - 2)] - s[static_cast<size_t>(n - 1)];
    return w;
}

bool is_admissible(const Configuration& c, const Weight& lambda) {
    if (weight_of_configuration(c) != lambda) return false;
    const int n = c.spec.type.rank;
    for (int a = 1; a <= n; ++a) {
        const int top = c.nu[static_cast<size_t>(a - 1)].largest();
        for (int i = 1; i <= top; ++i)
            if (vacancy(c, a, i) < 0) return false;
    }
    return true;
}

namespace {

// Distinct part lengths of a partition with their multiplicities,
// longest first.
std::vector<std::pair<int, int>> length_blocks(const Partition& p) {
    std::vector<std::pair<int, int>> blocks;
    for (int part : p.parts()) {
        if (!blocks.empty() && blocks.back().first == part)
            ++blocks.back().second;
        else
            blocks.emplace_back(part, 1);
    }
    return blocks;
}

}  // namespace

long long cocharge_config(const Configuration& c) {
    const int n = c.spec.type.rank;
    long long twice = 0;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    for (int a = 0; a < n; ++a) blocks.push_back(length_blocks(c.nu[static_cast<size_t>(a)]));
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            const int pair_ab = cartan_pairing(a, b, c.spec.type);
            if (pair_ab == 0) continue;
            for (const auto& [j, mj] : blocks[static_cast<size_t>(a - 1)]) {
                for (const auto& [k, mk] : blocks[static_cast<size_t>(b - 1)]) {
                    const long long term = checked_mul(
                        checked_mul(static_cast<long long>(std::min(j, k)), mj), mk);
                    twice = checked_add(twice, checked_mul(pair_ab, term));
                }
            }
        }
    }
    if (twice % 2 != 0) throw std::logic_error("cocharge: odd doubled value");
    return twice / 2;
}

long long cocharge(const RiggedConfiguration& rc) {
    long long total = cocharge_config(rc.config);
    for (const auto& rig : rc.riggings)
        for (int r : rig) total = checked_add(total, r);
    return total;
}

namespace {

// Row sizes forced by the size equations, or nothing when they have no
// nonnegative (type D: integral) solution.
std::optional<std::vector<int>> forced_sizes(const TensorSpec& spec, const Weight& lambda) {
    const int n = spec.type.rank;
    const int L = spec.length;
    std::vector<int> s(static_cast<size_t>(n));
    long acc = 0;
    if (spec.type.family == Family::A) {
        for (int a = 1; a <= n; ++a) {
            acc += lambda.coords[static_cast<size_t>(a - 1)];
            const long v = L - acc;
            if (v < 0) return std::nullopt;
            s[static_cast<size_t>(a - 1)] = static_cast<int>(v);
        }
        // consistency with the final coordinate: total weight equals L
        if (acc + lambda.coords[static_cast<size_t>(n)] != L) return std::nullopt;
        return s;
    }
    for (int a = 1; a <= n - 2; ++a) {
        acc += lambda.coords[static_cast<size_t>(a - 1)];
        const long v = L - acc;
        if (v < 0) return std::nullopt;
        s[static_cast<size_t>(a - 1)] = static_cast<int>(v);
    }
    const long lam_n1 = lambda.coords[static_cast<size_t>(n - 2)];
    const long lam_n = lambda.coords[static_cast<size_t>(n - 1)];
    const long twice_spin_up = L - acc - lam_n1 + lam_n;
    const long twice_spin_dn = L - acc - lam_n1 - lam_n;
    if (twice_spin_up < 0 || twice_spin_dn < 0) return std::nullopt;
    if (twice_spin_up % 2 != 0 || twice_spin_dn % 2 != 0) return std::nullopt;
    s[static_cast<size_t>(n - 2)] = static_cast<int>(twice_spin_up / 2);
    s[static_cast<size_t>(n - 1)] = static_cast<int>(twice_spin_dn / 2);
    return s;
}

}  // namespace

std::vector<Configuration> enumerate_configurations(const TensorSpec& spec, const Weight& lambda) {
    if (static_cast<int>(lambda.coords.size()) != weight_length(spec.type))
        throw std::domain_error("enumerate_configurations: weight length mismatch");
    std::vector<Configuration> out;
    const auto sizes = forced_sizes(spec, lambda);
    if (!sizes) return out;
    const int n = spec.type.rank;
    std::vector<std::vector<Partition>> choices;
    for (int a = 0; a < n; ++a) choices.push_back(partitions_of((*sizes)[static_cast<size_t>(a)]));

    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    for (;;) {
        Configuration c{spec, {}};
        for (int a = 0; a < n; ++a)
            c.nu.push_back(choices[static_cast<size_t>(a)][idx[static_cast<size_t>(a)]]);
        if (is_admissible(c, lambda)) out.push_back(std::move(c));
        int a = n - 1;
        while (a >= 0) {
            if (++idx[static_cast<size_t>(a)] < choices[static_cast<size_t>(a)].size()) break;
            idx[static_cast<size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return out;
}

std::vector<RiggedConfiguration> enumerate_rc(const TensorSpec& spec, const Weight& lambda) {
    std::vector<RiggedConfiguration> out;
    for (const Configuration& c : enumerate_configurations(spec, lambda)) {
        // one slot per block of equal-length rows, colors in order
        struct Block {
            int color;  // 0-based
            int length;
            int mult;
            std::vector<Partition> choices;
        };
        std::vector<Block> slots;
        for (int a = 1; a <= spec.type.rank; ++a) {
            for (const auto& [len, mult] : length_blocks(c.nu[static_cast<size_t>(a - 1)])) {
                const long cap = vacancy(c, a, len);
                slots.push_back(
                    {a - 1, len, mult, partitions_in_box(static_cast<int>(cap), mult)});
            }
        }
        std::vector<size_t> idx(slots.size(), 0);
        for (;;) {
            RiggedConfiguration rc{c, std::vector<std::vector<int>>(c.nu.size())};
            for (size_t a = 0; a < c.nu.size(); ++a)
                rc.riggings[a].reserve(static_cast<size_t>(c.nu[a].num_parts()));
            for (size_t sIdx = 0; sIdx < slots.size(); ++sIdx) {
                const auto& slot = slots[sIdx];
                const Partition& choice = slot.choices[idx[sIdx]];
                for (int k = 0; k < slot.mult; ++k) {
                    const int label = k < choice.num_parts() ? choice.part(k) : 0;
                    rc.riggings[static_cast<size_t>(slot.color)].push_back(label);
                }
            }
            out.push_back(std::move(rc));
            int s = static_cast<int>(slots.size()) - 1;
            while (s >= 0) {
                if (++idx[static_cast<size_t>(s)] < slots[static_cast<size_t>(s)].choices.size())
                    break;
                idx[static_cast<size_t>(s)] = 0;
                --s;
            }
            if (s < 0) break;
        }
    }
    return out;
}

Laurent fermionic_M(const TensorSpec& spec, const Weight& lambda) {
    Laurent m;
    for (const Configuration& c : enumerate_configurations(spec, lambda)) {
        Laurent term = Laurent::one().shifted(cocharge_config(c));
        for (int a = 1; a <= spec.type.rank; ++a)
            for (const auto& [len, mult] : length_blocks(c.nu[static_cast<size_t>(a - 1)]))
                term *= q_binomial(vacancy(c, a, len), mult);
        m += term;
    }
    return m;
}

RiggedConfiguration complement(const RiggedConfiguration& rc) {
    RiggedConfiguration out{rc.config, std::vector<std::vector<int>>(rc.config.nu.size())};
    for (int a = 1; a <= rc.config.spec.type.rank; ++a) {
        const auto& part = rc.config.nu[static_cast<size_t>(a - 1)];
        const auto& rig = rc.riggings[static_cast<size_t>(a - 1)];
        auto& dst = out.riggings[static_cast<size_t>(a - 1)];
        int k = 0;
        while (k < part.num_parts()) {
            int end = k;
            while (end < part.num_parts() && part.part(end) == part.part(k)) ++end;
            const int mult = end - k;
            const long cap = vacancy(rc.config, a, part.part(k));
            std::vector<int> labels;
            for (int r = k; r < end; ++r) {
                const int v = rig[static_cast<size_t>(r)];
                if (v > 0) labels.push_back(v);
            }
            std::sort(labels.begin(), labels.end(), std::greater<int>());
            const Partition comp =
                complement_in_box(Partition(std::move(labels)), static_cast<int>(cap), mult);
            for (int r = 0; r < mult; ++r)
                dst.push_back(r < comp.num_parts() ? comp.part(r) : 0);
            k = end;
        }
    }
    return out;
}

std::string rc_str(const RiggedConfiguration& rc, bool show_vacancies) {
    std::ostringstream os;
    for (size_t a = 0; a < rc.config.nu.size(); ++a) {
        if (a) os << " | ";
        os << "nu(" << a + 1 << ")=";
        const auto& part = rc.config.nu[a];
        if (part.empty()) {
            os << "-";
            continue;
        }
        for (int k = 0; k < part.num_parts(); ++k) {
            if (k) os << " ";
            os << part.part(k) << "[" << rc.riggings[a][static_cast<size_t>(k)];
            if (show_vacancies)
                os << "/" << vacancy(rc.config, static_cast<int>(a) + 1, part.part(k));
            os << "]";
        }
    }
    return os.str();
}

}  // namespace xm
