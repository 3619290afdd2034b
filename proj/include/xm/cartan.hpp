#pragma once

#include <string>
#include <vector>

namespace xm {

enum class Family { A, D };

// Classical Cartan type underlying the affine families A_n^(1), D_n^(1).
struct CartanType {
    Family family = Family::A;
    int rank = 1;
    bool operator==(const CartanType&) const = default;
};

CartanType type_a(int rank);  // rank >= 1
CartanType type_d(int rank);  // rank >= 4
std::string type_str(const CartanType& t);

// Length of a weight vector in epsilon coordinates: n+1 for A_n, n for D_n.
int weight_length(const CartanType& t);

// (alpha_a | alpha_b) under the standard inner product. For type A the
// simple roots are e_a - e_{a+1}; for type D additionally
// alpha_n = e_{n-1} + e_n, so (alpha_{n-1}|alpha_n) = 0 and
// (alpha_{n-2}|alpha_n) = -1. Indices are 1-based classical colors.
int cartan_pairing(int a, int b, const CartanType& t);

/*
 * Integral weight in epsilon coordinates. For a type D weight the last
 * coordinate may be negative.
 */
struct Weight {
    std::vector<int> coords;
    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

Weight zero_weight(const CartanType& t);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);

// Dominance: A: coords weakly decreasing and nonnegative;
// D: c_1 >= ... >= c_{n-1} >= |c_n|.
bool is_dominant(const Weight& w, const CartanType& t);

// <h_i, w> for a classical index i: A (and D with i < n): c_i - c_{i+1};
// D with i = n: c_{n-1} + c_n.
int coroot_pairing(const Weight& w, int i, const CartanType& t);

// Classical projection of the simple root alpha_i. For i = 0 this is the
// negated highest root: A: e_{n+1} - e_1; D: -e_1 - e_2.
Weight simple_root(int i, const CartanType& t);

// Parses either epsilon coordinates ("3,2" or "1,1,1,-1") or
// fundamental-weight syntax ("L3+L4", "2L3"). Fundamental weights follow
// the epsilon-coordinate expansion; for type D the spin weights
// L_{n-1}, L_n are half-integral, so a combination must land on the
// integral lattice or the parse is rejected.
Weight parse_weight(const std::string& text, const CartanType& t);
std::string weight_str(const Weight& w);  // "3,2"

// All dominant integral weights that can occur as the weight of a word of
// the given length over the level-1 alphabet, in a fixed deterministic
// order. (A superset of the weights with nonempty path sets is fine for
// sweep verification; emptiness must then agree on both sides.)
std::vector<Weight> dominant_weights(const CartanType& t, int length);

}  // namespace xm
