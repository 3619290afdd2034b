#pragma once

#include "xm/crystal.hpp"
#include "xm/rigged.hpp"

#include <vector>

namespace xm {

/*
 * Result of one box-removal step: the extracted letter (the rank of the
 * rigged configuration), the shortened rigged configuration, and the row
 * lengths the sweeps selected, kept for step tables. selected[a-1] is the
 * forward-sweep length at color a (0 when the sweep never reached it);
 * selected_bar is the backward-sweep analogue and stays empty for type A.
 */
struct DeltaStep {
    Letter rank;
    RiggedConfiguration rest;
    std::vector<int> selected;
    std::vector<int> selected_bar;
};

// Tie-break among equally long singular rows. The outcomes agree in
// canonical form; both policies exist to let tests prove that.
enum class RowChoice { First, Last };

/*
 * One application of the box-removal map. Selection sweeps colors left to
 * right, at each color taking the minimal singular row length that is at
 * least the previously selected one (a row is singular when its label
 * equals the current vacancy number of its length). Type A stops at the
 * first color with no such row, which names the rank; completing the sweep
 * gives rank n+1. Type D adds the spin branch at colors n-1, n and a
 * backward sweep toward color 1 selecting a second row per color, which
 * must be a different physical row when it has the same length as the
 * forward one. All box removals and label resets are applied
 * simultaneously: selected rows shrink by one box and take the vacancy
 * number of their new length in the shortened configuration; every other
 * label is carried over.
 */
DeltaStep delta(const RiggedConfiguration& rc, RowChoice choice = RowChoice::First);

// Full bijection to a tensor word: the j-th letter from the left is the
// rank of the j-th box-removal iterate. An optional trace collects every
// step. The configuration must be exhausted exactly at length 0.
Path phi(const RiggedConfiguration& rc, std::vector<DeltaStep>* trace = nullptr);

// phi after complementing all labels in their rectangles. Satisfies
// cocharge(rc) = -energy(phi_tilde(rc)).
Path phi_tilde(const RiggedConfiguration& rc, std::vector<DeltaStep>* trace = nullptr);

/*
 * Direct inverse for type A rank 1, built letter by letter from the right.
 * A letter 1 leaves the state unchanged; a letter 2 adds a box to the
 * longest singular string, where singularity is judged against the
 * vacancy numbers of the prefix consumed so far and a new length-1 string
 * is started when no singular string exists. The grown row takes the
 * vacancy number of its new length over the extended prefix. After the
 * last letter every block of labels is complemented in its rectangle.
 * The optional trace records the state after each letter, before the
 * final complementation. Throws std::domain_error unless the input is a
 * classically highest word of type A rank 1.
 */
RiggedConfiguration psi_su2(const Path& p, std::vector<RiggedConfiguration>* trace = nullptr);

/*
 * Inverse lookup table for one (tensor power, weight) block: phi_tilde is
 * tabulated over the enumerated rigged configurations and inverted. Safe
 * for concurrent queries once built.
 */
class BijectionTable {
public:
    BijectionTable(const TensorSpec& spec, const Weight& lambda);

    const std::vector<RiggedConfiguration>& rcs() const { return rcs_; }
    // phi_tilde image of rcs()[k] at the same index.
    const std::vector<Path>& images() const { return images_; }
    // Preimage of p under phi_tilde, or nullptr if p is not in the image.
    const RiggedConfiguration* rc_for(const Path& p) const;

private:
    std::vector<RiggedConfiguration> rcs_;
    std::vector<Path> images_;
    std::vector<std::pair<std::vector<int>, size_t>> index_;  // letter values -> rc position
};

// The unique rigged configuration mapping to p under phi_tilde, found by
// exhaustive tabulation over the weight block of p. For type A rank 1 this
// agrees with psi_su2. Throws std::domain_error if p is not classically
// highest, std::logic_error if p is unexpectedly missing from the image.
RiggedConfiguration rc_from_path(const Path& p);

}  // namespace xm
