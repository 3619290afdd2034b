#include "xm/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace xm {

namespace {

struct Row {
    int len;
    int rig;
    bool shrink = false;
};

// Working copy of a rigged configuration as explicit rows per color.
std::vector<std::vector<Row>> rows_of(const RiggedConfiguration& rc) {
    std::vector<std::vector<Row>> rows(rc.config.nu.size());
    for (size_t a = 0; a < rc.config.nu.size(); ++a) {
        const auto& part = rc.config.nu[a];
        for (int k = 0; k < part.num_parts(); ++k)
            rows[a].push_back({part.part(k), rc.riggings[a][static_cast<size_t>(k)], false});
    }
    return rows;
}

// Indices of singular rows of exactly this length, storage order.
std::vector<size_t> singular_rows_at(const std::vector<Row>& rows, const Configuration& c,
                                     int color, int len) {
    const long cap = vacancy(c, color, len);
    std::vector<size_t> hits;
    for (size_t k = 0; k < rows.size(); ++k)
        if (rows[k].len == len && rows[k].rig == cap && !rows[k].shrink) hits.push_back(k);
    return hits;
}

// Minimal singular row length >= lo at this color, together with the row
// chosen under the policy; nullopt when no singular row qualifies.
struct Selection {
    int len;
    size_t row;
};

std::optional<Selection> find_singular(const std::vector<Row>& rows, const Configuration& c,
                                       int color, int lo, RowChoice choice) {
    std::vector<int> lengths;
    for (const Row& r : rows)
        if (r.len >= lo && !r.shrink) lengths.push_back(r.len);
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (int len : lengths) {
        const auto hits = singular_rows_at(rows, c, color, len);
        if (hits.empty()) continue;
        return Selection{len, choice == RowChoice::First ? hits.front() : hits.back()};
    }
    return std::nullopt;
}

RiggedConfiguration assemble(const TensorSpec& old_spec,
                             const std::vector<std::vector<Row>>& rows) {
    const TensorSpec next{old_spec.type, old_spec.length - 1};
    // shrink marked rows, drop emptied ones, and recompute their labels as
    // the vacancy numbers of the shortened configuration
    std::vector<std::vector<Row>> updated(rows.size());
    Configuration next_config{next, {}};
    for (size_t a = 0; a < rows.size(); ++a) {
        for (const Row& r : rows[a]) {
            const int len = r.shrink ? r.len - 1 : r.len;
            if (len > 0) updated[a].push_back({len, r.rig, r.shrink});
        }
        std::sort(updated[a].begin(), updated[a].end(),
                  [](const Row& x, const Row& y) { return x.len > y.len; });
        std::vector<int> parts;
        for (const Row& r : updated[a]) parts.push_back(r.len);
        next_config.nu.emplace_back(std::move(parts));
    }
    RiggedConfiguration rest{next_config, std::vector<std::vector<int>>(rows.size())};
    for (size_t a = 0; a < rows.size(); ++a) {
        for (const Row& r : updated[a]) {
            const int label =
                r.shrink ? static_cast<int>(vacancy(next_config, static_cast<int>(a) + 1, r.len))
                         : r.rig;
            rest.riggings[a].push_back(label);
        }
    }
    canonicalize_riggings(rest);
    return rest;
}

DeltaStep delta_a(const RiggedConfiguration& rc, RowChoice choice) {
    const int n = rc.config.spec.type.rank;
    auto rows = rows_of(rc);
    std::vector<int> selected(static_cast<size_t>(n), 0);

    int rank = n + 1;
    int lo = 1;
    for (int a = 1; a <= n; ++a) {
        const auto sel = find_singular(rows[static_cast<size_t>(a - 1)], rc.config, a, lo, choice);
        if (!sel) {
            rank = a;
            break;
        }
        rows[static_cast<size_t>(a - 1)][sel->row].shrink = true;
        selected[static_cast<size_t>(a - 1)] = sel->len;
        lo = sel->len;
    }
    return {Letter{rank}, assemble(rc.config.spec, rows), std::move(selected), {}};
}

DeltaStep delta_d(const RiggedConfiguration& rc, RowChoice choice) {
    const int n = rc.config.spec.type.rank;
    auto rows = rows_of(rc);
    std::vector<int> selected(static_cast<size_t>(n), 0);
    std::vector<int> selected_bar(static_cast<size_t>(n), 0);

    const auto pick = [&](int a, int lo) {
        return find_singular(rows[static_cast<size_t>(a - 1)], rc.config, a, lo, choice);
    };
    const auto take = [&](int a, const Selection& sel) {
        rows[static_cast<size_t>(a - 1)][sel.row].shrink = true;
        selected[static_cast<size_t>(a - 1)] = sel.len;
    };

    int rank = 0;
    int lo = 1;
    bool decided = false;
    for (int a = 1; a <= n - 2 && !decided; ++a) {
        const auto sel = pick(a, lo);
        if (!sel) {
            rank = a;
            decided = true;
            break;
        }
        take(a, *sel);
        lo = sel->len;
    }

    if (!decided) {
        // spin branch: both tail colors are probed independently
        const auto sel_up = pick(n - 1, lo);
        const auto sel_dn = pick(n, lo);
        if (!sel_up && !sel_dn) {
            rank = n - 1;
            decided = true;
        } else if (sel_up && !sel_dn) {
            take(n - 1, *sel_up);
            rank = n;
            decided = true;
        } else if (!sel_up && sel_dn) {
            take(n, *sel_dn);
            rank = -n;
            decided = true;
        } else {
            take(n - 1, *sel_up);
            take(n, *sel_dn);
            int bar_lo = std::max(sel_up->len, sel_dn->len);
            // backward sweep; a row already claimed by the forward sweep is
            // not reusable, which enforces the two-singular-rows condition
            // at the shared length
            for (int a = n - 2; a >= 1; --a) {
                const auto sel = pick(a, bar_lo);
                if (!sel) {
                    rank = -(a + 1);
                    decided = true;
                    break;
                }
                rows[static_cast<size_t>(a - 1)][sel->row].shrink = true;
                selected_bar[static_cast<size_t>(a - 1)] = sel->len;
                bar_lo = sel->len;
            }
            if (!decided) {
                rank = -1;
                decided = true;
            }
        }
    }
    return {Letter{rank}, assemble(rc.config.spec, rows), std::move(selected),
            std::move(selected_bar)};
}

}  // namespace

DeltaStep delta(const RiggedConfiguration& rc, RowChoice choice) {
    if (rc.config.spec.length < 1)
        throw std::domain_error("delta: tensor power already exhausted");
    validate_rc(rc);
    return rc.config.spec.type.family == Family::A ? delta_a(rc, choice) : delta_d(rc, choice);
}

Path phi(const RiggedConfiguration& rc, std::vector<DeltaStep>* trace) {
    validate_rc(rc);
    RiggedConfiguration current = rc;
    std::vector<Letter> word;
    const int L = rc.config.spec.length;
    for (int step = 0; step < L; ++step) {
        DeltaStep d = delta(current);
        word.push_back(d.rank);
        current = d.rest;
        if (trace) trace->push_back(std::move(d));
    }
    for (const Partition& part : current.config.nu)
        if (!part.empty())
            throw std::logic_error("phi: configuration not exhausted at length zero");
    return make_path(rc.config.spec, std::move(word));
}

Path phi_tilde(const RiggedConfiguration& rc, std::vector<DeltaStep>* trace) {
    return phi(complement(rc), trace);
}

RiggedConfiguration psi_su2(const Path& p, std::vector<RiggedConfiguration>* trace) {
    if (p.spec.type.family != Family::A || p.spec.type.rank != 1)
        throw std::domain_error("psi_su2: defined for type A rank 1 only");
    if (!is_classically_highest(p))
        throw std::domain_error("psi_su2: path is not classically highest");

    std::vector<Row> rows;
    const auto snapshot = [&](int consumed) {
        RiggedConfiguration rc = empty_rc({p.spec.type, consumed});
        std::vector<int> parts, rigs;
        for (const Row& r : rows) {
            parts.push_back(r.len);
            rigs.push_back(r.rig);
        }
        rc.config.nu[0] = Partition(std::move(parts));
        rc.riggings[0] = std::move(rigs);
        canonicalize_riggings(rc);
        return rc;
    };

    const int L = static_cast<int>(p.factors.size());
    for (int i = 1; i <= L; ++i) {
        const Letter b = p.factors[static_cast<size_t>(L - i)];  // i-th letter from the right
        if (b.value == 2) {
            // vacancy numbers of the prefix consumed before this letter
            const Configuration before = snapshot(i - 1).config;
            int grow = -1;  // index of the longest singular row, none means new row
            for (size_t k = 0; k < rows.size(); ++k) {
                if (rows[k].rig == vacancy(before, 1, rows[k].len) &&
                    (grow < 0 || rows[k].len > rows[static_cast<size_t>(grow)].len))
                    grow = static_cast<int>(k);
            }
            if (grow < 0) {
                rows.push_back({0, 0, false});
                grow = static_cast<int>(rows.size()) - 1;
            }
            rows[static_cast<size_t>(grow)].len += 1;
            // re-labelled against the extended prefix
            Configuration after = snapshot(i).config;
            rows[static_cast<size_t>(grow)].rig =
                static_cast<int>(vacancy(after, 1, rows[static_cast<size_t>(grow)].len));
        }
        if (trace) trace->push_back(snapshot(i));
        std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
            return x.len != y.len ? x.len > y.len : x.rig > y.rig;
        });
    }
    return complement(snapshot(L));
}

BijectionTable::BijectionTable(const TensorSpec& spec, const Weight& lambda)
    : rcs_(enumerate_rc(spec, lambda)) {
    images_.reserve(rcs_.size());
    index_.reserve(rcs_.size());
    for (size_t k = 0; k < rcs_.size(); ++k) {
        images_.push_back(phi_tilde(rcs_[k]));
        std::vector<int> key;
        key.reserve(images_.back().factors.size());
        for (Letter b : images_.back().factors) key.push_back(b.value);
        index_.emplace_back(std::move(key), k);
    }
    std::sort(index_.begin(), index_.end());
}

const RiggedConfiguration* BijectionTable::rc_for(const Path& p) const {
    std::vector<int> key;
    key.reserve(p.factors.size());
    for (Letter b : p.factors) key.push_back(b.value);
    const auto it = std::lower_bound(
        index_.begin(), index_.end(), key,
        [](const auto& entry, const std::vector<int>& k) { return entry.first < k; });
    if (it == index_.end() || it->first != key) return nullptr;
    return &rcs_[it->second];
}

RiggedConfiguration rc_from_path(const Path& p) {
    if (!is_classically_highest(p))
        throw std::domain_error("rc_from_path: path is not classically highest");
    const BijectionTable table(p.spec, path_weight(p));
    const RiggedConfiguration* rc = table.rc_for(p);
    if (!rc) throw std::logic_error("rc_from_path: highest weight path missing from the image");
    return *rc;
}

}  // namespace xm
