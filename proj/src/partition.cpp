#include "xm/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (k > 0 && parts_[k - 1] < parts_[k])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

int Partition::multiplicity(int i) const {
    int count = 0;
    for (int p : parts_) count += (p == i);
    return count;
}

long Partition::column_count(int i) const {
    long total = 0;
    for (int p : parts_) total += std::min(p, i);
    return total;
}

std::vector<int> Partition::column_heights() const {
    std::vector<int> heights(static_cast<size_t>(largest()), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++heights[static_cast<size_t>(c)];
    return heights;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) os << ",";
        os << parts_[k];
    }
    os << ")";
    return os.str();
}

namespace {

void grow_in_box(int max_part, int slots_left, std::vector<int>& current,
                 std::vector<Partition>& out) {
    out.emplace_back(current);
    if (slots_left == 0) return;
    const int hi = current.empty() ? max_part : std::min(max_part, current.back());
    for (int v = 1; v <= hi; ++v) {
        current.push_back(v);
        grow_in_box(max_part, slots_left - 1, current, out);
        current.pop_back();
    }
}

void grow_of_size(int remaining, int max_part, std::vector<int>& current,
                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int v = 1; v <= std::min(max_part, remaining); ++v) {
        current.push_back(v);
        grow_of_size(remaining - v, v, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int p, int m) {
    if (p < 0 || m < 0) throw std::invalid_argument("partitions_in_box: negative argument");
    std::vector<Partition> out;
    std::vector<int> current;
    if (p == 0 || m == 0) return {Partition{}};
    grow_in_box(p, m, current, out);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> current;
    grow_of_size(n, n, current, out);
    return out;
}

Partition complement_in_box(const Partition& rho, int p, int m) {
    if (rho.num_parts() > m || rho.largest() > p)
        throw std::domain_error("complement_in_box: partition does not fit in the box");
    std::vector<int> padded(rho.parts());
    padded.resize(static_cast<size_t>(m), 0);
    std::vector<int> result;
    for (auto it = padded.rbegin(); it != padded.rend(); ++it) {
        const int r = p - *it;
        if (r > 0) result.push_back(r);
    }
    return Partition(std::move(result));
}

}  // namespace xm
