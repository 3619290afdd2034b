#include "xm/cartan.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace xm {

CartanType type_a(int rank) {
    if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
    return {Family::A, rank};
}

CartanType type_d(int rank) {
    if (rank < 4) throw std::invalid_argument("type D requires rank >= 4");
    return {Family::D, rank};
}

std::string type_str(const CartanType& t) {
    return (t.family == Family::A ? "A" : "D") + std::to_string(t.rank);
}

int weight_length(const CartanType& t) {
    return t.family == Family::A ? t.rank + 1 : t.rank;
}

int cartan_pairing(int a, int b, const CartanType& t) {
    const int n = t.rank;
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("cartan_pairing: color out of range");
    if (a == b) return 2;
    if (t.family == Family::D) {
        const int lo = std::min(a, b), hi = std::max(a, b);
        if (lo == n - 1 && hi == n) return 0;   // both spin nodes attach to n-2
        if (lo == n - 2 && hi == n) return -1;
    }
    return std::abs(a - b) == 1 ? -1 : 0;
}

Weight zero_weight(const CartanType& t) {
    return Weight{std::vector<int>(static_cast<size_t>(weight_length(t)), 0)};
}

Weight add(const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("weight addition: length mismatch");
    Weight out = a;
    for (size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += b.coords[k];
    return out;
}

Weight sub(const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("weight subtraction: length mismatch");
    Weight out = a;
    for (size_t k = 0; k < out.coords.size(); ++k) out.coords[k] -= b.coords[k];
    return out;
}

bool is_dominant(const Weight& w, const CartanType& t) {
    if (static_cast<int>(w.coords.size()) != weight_length(t)) return false;
    const auto& c = w.coords;
    for (size_t k = 0; k + 1 < c.size(); ++k)
        if (c[k] < c[k + 1]) return false;
    if (t.family == Family::A) return c.empty() || c.back() >= 0;
    // D: the last coordinate may be negative but no larger in magnitude
    // than its neighbor.
    const size_t n = c.size();
    return c[n - 2] >= std::abs(c[n - 1]);
}

int coroot_pairing(const Weight& w, int i, const CartanType& t) {
    const int n = t.rank;
    if (i < 1 || i > n) throw std::invalid_argument("coroot_pairing: classical index expected");
    if (static_cast<int>(w.coords.size()) != weight_length(t))
        throw std::invalid_argument("coroot_pairing: weight length mismatch");
    if (t.family == Family::D && i == n)
        return w.coords[static_cast<size_t>(n - 2)] + w.coords[static_cast<size_t>(n - 1)];
    return w.coords[static_cast<size_t>(i - 1)] - w.coords[static_cast<size_t>(i)];
}

Weight simple_root(int i, const CartanType& t) {
    const int n = t.rank;
    if (i < 0 || i > n) throw std::invalid_argument("simple_root: index out of range");
    Weight w = zero_weight(t);
    if (i == 0) {
        if (t.family == Family::A) {
            w.coords.back() = 1;
            w.coords.front() = -1;
        } else {
            w.coords[0] = -1;
            w.coords[1] = -1;
        }
        return w;
    }
    if (t.family == Family::D && i == n) {
        w.coords[static_cast<size_t>(n - 2)] = 1;
        w.coords[static_cast<size_t>(n - 1)] = 1;
        return w;
    }
    w.coords[static_cast<size_t>(i - 1)] = 1;
    w.coords[static_cast<size_t>(i)] = -1;
    return w;
}

namespace {

// Fundamental weight in doubled epsilon coordinates (exact for the
// half-integral spin weights of type D).
std::vector<int> fundamental_doubled(int a, const CartanType& t) {
    const int n = t.rank;
    if (a < 1 || a > n) throw std::invalid_argument("fundamental weight index out of range");
    std::vector<int> two(static_cast<size_t>(weight_length(t)), 0);
    if (t.family == Family::A || a <= n - 2) {
        for (int k = 0; k < a; ++k) two[static_cast<size_t>(k)] = 2;
        return two;
    }
    for (int k = 0; k < n - 1; ++k) two[static_cast<size_t>(k)] = 1;
    two[static_cast<size_t>(n - 1)] = (a == n) ? 1 : -1;
    return two;
}

Weight parse_fundamental_combination(const std::string& text, const CartanType& t) {
    std::vector<int> two(static_cast<size_t>(weight_length(t)), 0);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('+', pos);
        if (end == std::string::npos) end = text.size();
        std::string term = text.substr(pos, end - pos);
        pos = end + 1;
        if (term.empty()) throw std::invalid_argument("weight syntax: empty term");
        size_t lpos = term.find('L');
        if (lpos == std::string::npos)
            throw std::invalid_argument("weight syntax: expected L<index> term in '" + term + "'");
        long coeff = 1;
        if (lpos > 0) {
            size_t used = 0;
            coeff = std::stol(term.substr(0, lpos), &used);
            if (used != lpos || coeff < 1)
                throw std::invalid_argument("weight syntax: bad coefficient in '" + term + "'");
        }
        size_t used = 0;
        long index = std::stol(term.substr(lpos + 1), &used);
        if (used != term.size() - lpos - 1)
            throw std::invalid_argument("weight syntax: bad index in '" + term + "'");
        const auto fund = fundamental_doubled(static_cast<int>(index), t);
        for (size_t k = 0; k < two.size(); ++k)
            two[k] += static_cast<int>(coeff) * fund[k];
    }
    Weight w = zero_weight(t);
    for (size_t k = 0; k < two.size(); ++k) {
        if (two[k] % 2 != 0)
            throw std::invalid_argument("weight is not integral in epsilon coordinates: " + text);
        w.coords[k] = two[k] / 2;
    }
    return w;
}

}  // namespace

Weight parse_weight(const std::string& text, const CartanType& t) {
    if (text.empty()) throw std::invalid_argument("empty weight");
    if (text.find('L') != std::string::npos) return parse_fundamental_combination(text, t);
    Weight w;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad weight coordinate: '" + item + "'");
        w.coords.push_back(static_cast<int>(v));
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (static_cast<int>(w.coords.size()) != weight_length(t))
        throw std::invalid_argument("weight has " + std::to_string(w.coords.size()) +
                                    " coordinates, expected " + std::to_string(weight_length(t)));
    return w;
}

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    for (size_t k = 0; k < w.coords.size(); ++k) {
        if (k) os << ",";
        os << w.coords[k];
    }
    return os.str();
}

namespace {

void dominant_rec(const CartanType& t, int length, size_t pos, int prev, int abs_sum,
                  Weight& current, std::vector<Weight>& out) {
    const size_t dim = current.coords.size();
    if (pos == dim) {
        int total = 0;
        for (int c : current.coords) total += c;
        if ((length - total) % 2 == 0) out.push_back(current);
        return;
    }
    const bool last = (pos + 1 == dim);
    if (t.family == Family::D && last) {
        // the final coordinate of a dominant D weight ranges over -prev..prev
        for (int v = -prev; v <= prev; ++v) {
            if (abs_sum + std::abs(v) > length) continue;
            current.coords[pos] = v;
            dominant_rec(t, length, pos + 1, prev, abs_sum + std::abs(v), current, out);
        }
        return;
    }
    for (int v = 0; v <= prev; ++v) {
        if (abs_sum + v > length) break;
        current.coords[pos] = v;
        dominant_rec(t, length, pos + 1, v, abs_sum + v, current, out);
    }
}

}  // namespace

std::vector<Weight> dominant_weights(const CartanType& t, int length) {
    if (length < 0) throw std::invalid_argument("dominant_weights: negative length");
    std::vector<Weight> out;
    if (t.family == Family::A) {
        // weights of length-L words are compositions of L; the dominant ones
        // are partitions of L with at most n+1 parts
        std::vector<int> current;
        struct Gen {
            int dim;
            std::vector<Weight>* out;
            void operator()(int remaining, int max_part, std::vector<int>& cur) {
                if (remaining == 0) {
                    Weight w;
                    w.coords = cur;
                    w.coords.resize(static_cast<size_t>(dim), 0);
                    out->push_back(w);
                    return;
                }
                if (static_cast<int>(cur.size()) == dim) return;
                for (int v = std::min(max_part, remaining); v >= 1; --v) {
                    cur.push_back(v);
                    (*this)(remaining - v, v, cur);
                    cur.pop_back();
                }
            }
        } gen{weight_length(t), &out};
        gen(length, length, current);
        std::sort(out.begin(), out.end());
        return out;
    }
    Weight current = zero_weight(t);
    dominant_rec(t, length, 0, length, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace xm
