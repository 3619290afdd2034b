#pragma once

#include <compare>
#include <string>
#include <vector>

namespace xm {

/*
 * Integer partition: a weakly decreasing sequence of positive parts.
 * Parts are stored explicitly (not as a multiplicity map) because the
 * box-removal algorithms address individual rows.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates ordering and positivity

    // |rho|, the total number of boxes.
    int size() const;
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int part(int k) const { return parts_[static_cast<size_t>(k)]; }
    const std::vector<int>& parts() const { return parts_; }

    // Number of parts equal to i.
    int multiplicity(int i) const;

    // Q_i: number of boxes in the first i columns, sum_k min(part_k, i).
    long column_count(int i) const;

    // Heights of columns 1..largest (the conjugate partition).
    std::vector<int> column_heights() const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;  // "(2,2,1)"; the empty partition prints "()"

private:
    std::vector<int> parts_;
};

// Every partition with at most m parts, each part at most p, exactly once,
// in lexicographic order on part lists (the empty partition first).
// The count is binomial(p+m, m).
std::vector<Partition> partitions_in_box(int p, int m);

// Every partition of n, in lexicographic order on part lists.
std::vector<Partition> partitions_of(int n);

// Complement inside the p x m box: pad rho with zeros to m parts, replace
// each part r by p - r, and reverse. Involutive on partitions_in_box(p, m).
// Throws std::domain_error if rho does not fit in the box.
Partition complement_in_box(const Partition& rho, int p, int m);

}  // namespace xm
