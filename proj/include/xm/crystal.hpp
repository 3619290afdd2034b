#pragma once

#include "xm/cartan.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xm {

/*
 * Letter of the level-1 vector crystal. Type A(n): values 1..n+1.
 * Type D(n): 1..n for unbarred letters; -k encodes the barred letter.
 * Negative encoding makes the weight sign a sign inspection and gives the
 * barred chain for free.
 */
struct Letter {
    int value = 1;
    bool barred() const { return value < 0; }
    // value order, used only as a container key; the crystal order lives in
    // letter_index and letter_greater
    auto operator<=>(const Letter&) const = default;
};

bool letter_valid(Letter b, const CartanType& t);

// Letters in storage order: A: 1..n+1; D: 1..n-1, n, n-bar, (n-1)-bar..1-bar.
// The unbarred n precedes n-bar purely as an enumeration tie-break; the
// crystal order leaves them incomparable.
std::vector<Letter> alphabet(const CartanType& t);
int letter_index(Letter b, const CartanType& t);

std::string letter_str(Letter b);                        // "3", "4b"
Letter parse_letter(const std::string& s, const CartanType& t);

Weight letter_weight(Letter b, const CartanType& t);     // +e_k / -e_k

// Arrows of the level-1 crystal graph, affine index included.
// A: f_i: i -> i+1 (1 <= i <= n), f_0: n+1 -> 1.
// D: f_i: i -> i+1 and (i+1)-bar -> i-bar (1 <= i <= n-1),
//    f_n: n-1 -> n-bar and n -> (n-1)-bar, f_0: 2-bar -> 1 and 1-bar -> 2.
std::optional<Letter> f_letter(Letter b, int i, const CartanType& t);
// e is the arrow-reversal of f: e_i(b) = b0 iff f_i(b0) = b.
std::optional<Letter> e_letter(Letter b, int i, const CartanType& t);

// Chain lengths (eps_i, phi_i) of the letter; both lie in {0, 1} on the
// level-1 crystal.
std::pair<int, int> eps_phi_letter(Letter b, int i, const CartanType& t);

struct TensorSpec {
    CartanType type;
    int length = 0;
    bool operator==(const TensorSpec&) const = default;
};

/*
 * Tensor word b_L (x) ... (x) b_1. Factors are stored leftmost first, so
 * factors[0] is b_L and factors[L-1] is the rightmost letter b_1. All text
 * and JSON forms use the same leftmost-first order.
 */
struct Path {
    TensorSpec spec;
    std::vector<Letter> factors;
    bool operator==(const Path&) const = default;
};

Path make_path(const TensorSpec& spec, std::vector<Letter> factors);  // validates
std::string path_str(const Path& p);  // space-separated letters, e.g. "4b 3 1b 2 1 1"

Weight path_weight(const Path& p);

// (eps_i, phi_i) of the sub-word factors[from, to), computed by folding the
// tensor-product rule left to right. The empty range is the unit (0, 0).
std::pair<int, int> eps_phi_range(const Path& p, int from, int to, int i);

int eps_path(const Path& p, int i);
int phi_path(const Path& p, int i);

/*
 * Tensor-product rule, with the raising operator acting on the left factor
 * when eps(left) > phi(right):
 *     e_i(x (x) y) = (e_i x) (x) y   if eps_i(x) > phi_i(y), else x (x) e_i y.
 * Only the e rule is axiomatic here; f is forced by the inversion axiom
 * e_i b' = b <=> b' = f_i b, which flips the comparison to >=:
 *     f_i(x (x) y) = (f_i x) (x) y   if eps_i(x) >= phi_i(y), else x (x) f_i y.
 * Both extend associatively over the whole word. Returns nullopt when the
 * selected letter carries no arrow.
 */
std::optional<Path> e_path(const Path& p, int i);
std::optional<Path> f_path(const Path& p, int i);

// Index of the factor the e (resp. f) rule selects, or nullopt for the
// empty word. Exposed for the associativity checks.
std::optional<int> e_position(const Path& p, int i);
std::optional<int> f_position(const Path& p, int i);

// Annihilated by every classical raising operator e_1..e_n.
bool is_classically_highest(const Path& p);

// All classically highest weight words of the given weight, in
// lexicographic order on the leftmost-first letter sequence (alphabet
// storage order). Generation is a right-to-left depth-first search pruned
// by the highest-weight condition and by weight feasibility.
std::vector<Path> enumerate_paths(const TensorSpec& spec, const Weight& lambda);

}  // namespace xm
