#include "xm/bijection.hpp"
#include "xm/energy.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace xm;

namespace {

Path word(const CartanType& t, std::vector<int> values) {
    std::vector<Letter> letters;
    for (int v : values) letters.push_back({v});
    return make_path({t, static_cast<int>(values.size())}, std::move(letters));
}

RiggedConfiguration rig(const TensorSpec& spec, std::vector<std::vector<int>> parts,
                        std::vector<std::vector<int>> riggings) {
    Configuration c{spec, {}};
    for (auto& p : parts) c.nu.emplace_back(std::move(p));
    RiggedConfiguration rc{std::move(c), std::move(riggings)};
    canonicalize_riggings(rc);
    validate_rc(rc);
    return rc;
}

const TensorSpec kA4L7{type_a(4), 7};
const TensorSpec kD4L6{type_d(4), 6};

RiggedConfiguration example_a_rc() {
    return rig(kA4L7, {{2, 2, 1}, {2, 1}, {1}, {}}, {{0, 0, 3}, {0, 0}, {0}, {}});
}

RiggedConfiguration example_d_rc() {
    return rig(kD4L6, {{2, 2, 1}, {2, 2}, {1}, {2}}, {{0, 0, 0}, {0, 0}, {0}, {0}});
}

}  // namespace

TEST_CASE("delta on the empty configuration extracts letter 1") {
    const auto rc = empty_rc({type_a(3), 4});
    const DeltaStep step = delta(rc);
    CHECK(step.rank == Letter{1});
    CHECK(step.rest == empty_rc({type_a(3), 3}));

    const auto rcd = empty_rc({type_d(4), 2});
    CHECK(delta(rcd).rank == Letter{1});
    CHECK_THROWS_AS(delta(empty_rc({type_a(2), 0})), std::domain_error);
}

TEST_CASE("type A box removal walks the worked seven-step table") {
    std::vector<DeltaStep> trace;
    const Path image = phi_tilde(example_a_rc(), &trace);
    CHECK(image == word(type_a(4), {3, 4, 2, 3, 1, 2, 1}));

    // complementation turns the label 3 into 0 and fixes everything else
    CHECK(complement(example_a_rc()) ==
          rig(kA4L7, {{2, 2, 1}, {2, 1}, {1}, {}}, {{0, 0, 0}, {0, 0}, {0}, {}}));

    REQUIRE(trace.size() == 7);
    const std::vector<int> ranks{3, 4, 2, 3, 1, 2, 1};
    for (size_t k = 0; k < trace.size(); ++k) CHECK(trace[k].rank == Letter{ranks[k]});

    const TensorSpec s6{type_a(4), 6}, s5{type_a(4), 5}, s4{type_a(4), 4}, s3{type_a(4), 3},
        s2{type_a(4), 2}, s1{type_a(4), 1};
    CHECK(trace[0].rest == rig(s6, {{2, 1, 1}, {1, 1}, {1}, {}}, {{0, 2, 0}, {0, 0}, {0}, {}}));
    CHECK(trace[1].rest == rig(s5, {{2, 1}, {1}, {}, {}}, {{0, 0}, {0}, {}, {}}));
    CHECK(trace[2].rest == rig(s4, {{1, 1}, {1}, {}, {}}, {{1, 0}, {0}, {}, {}}));
    CHECK(trace[3].rest == rig(s3, {{1}, {}, {}, {}}, {{0}, {}, {}, {}}));
    CHECK(trace[4].rest == rig(s2, {{1}, {}, {}, {}}, {{0}, {}, {}, {}}));
    CHECK(trace[5].rest == rig(s1, {{}, {}, {}, {}}, {{}, {}, {}, {}}));
    CHECK(trace[6].rest == empty_rc({type_a(4), 0}));

    CHECK(cocharge(example_a_rc()) == 12);
    CHECK(energy(image) == -12);
}

TEST_CASE("type D box removal walks the worked six-step table") {
    std::vector<DeltaStep> trace;
    const Path image = phi_tilde(example_d_rc(), &trace);
    CHECK(image == word(type_d(4), {-4, 3, -1, 2, 1, 1}));

    CHECK(complement(example_d_rc()) ==
          rig(kD4L6, {{2, 2, 1}, {2, 2}, {1}, {2}}, {{0, 0, 2}, {0, 0}, {0}, {0}}));

    REQUIRE(trace.size() == 6);
    const std::vector<int> ranks{-4, 3, -1, 2, 1, 1};
    for (size_t k = 0; k < trace.size(); ++k) CHECK(trace[k].rank == Letter{ranks[k]});

    const TensorSpec s5{type_d(4), 5}, s4{type_d(4), 4}, s3{type_d(4), 3}, s2{type_d(4), 2},
        s1{type_d(4), 1};
    CHECK(trace[0].rest == rig(s5, {{2, 2}, {2, 1}, {1}, {1}}, {{0, 0}, {0, 0}, {0}, {0}}));
    CHECK(trace[1].rest == rig(s4, {{2, 1}, {1, 1}, {1}, {1}}, {{0, 2}, {0, 0}, {0}, {0}}));
    CHECK(trace[2].rest == rig(s3, {{1}, {}, {}, {}}, {{1}, {}, {}, {}}));
    CHECK(trace[3].rest == empty_rc(s2));
    CHECK(trace[4].rest == empty_rc(s1));
    CHECK(trace[5].rest == empty_rc({type_d(4), 0}));

    // the third step exercises the backward sweep: both spin colours fire
    // and the sweep returns through colours 2 and 1
    CHECK(trace[2].selected == std::vector<int>{1, 1, 1, 1});
    CHECK(trace[2].selected_bar == std::vector<int>{2, 1, 0, 0});

    CHECK(cocharge(example_d_rc()) == 8);
    CHECK(energy(image) == -8);
}

TEST_CASE("phi sends the empty rigged configuration to the empty path") {
    for (const CartanType& t : {type_a(3), type_d(4)}) {
        const Path p = phi(empty_rc({t, 0}));
        CHECK(p.factors.empty());
        CHECK(phi_tilde(empty_rc({t, 0})) == p);
        CHECK(cocharge(empty_rc({t, 0})) == 0);
        CHECK(energy(p) == 0);
    }
}

TEST_CASE("phi maps the complemented su2 block onto the path set") {
    const TensorSpec spec{type_a(1), 5};
    const Weight lambda{{3, 2}};
    std::set<std::vector<Letter>> seen;
    for (const auto& rc : enumerate_rc(spec, lambda)) {
        const Path p = phi(complement(rc));
        CHECK(is_classically_highest(p));
        CHECK(path_weight(p) == lambda);
        seen.insert(p.factors);
    }
    const auto paths = enumerate_paths(spec, lambda);
    CHECK(seen.size() == paths.size());
    for (const Path& p : paths) CHECK(seen.count(p.factors) == 1);
}

TEST_CASE("box removal is insensitive to which equal singular row is taken") {
    for (const TensorSpec& spec : {TensorSpec{type_a(2), 6}, TensorSpec{type_d(4), 4}}) {
        for (const Weight& lambda : dominant_weights(spec.type, spec.length)) {
            for (const auto& rc : enumerate_rc(spec, lambda)) {
                RiggedConfiguration first = complement(rc), last = first;
                for (int step = 0; step < spec.length; ++step) {
                    const DeltaStep a = delta(first, RowChoice::First);
                    const DeltaStep b = delta(last, RowChoice::Last);
                    CHECK(a.rank == b.rank);
                    CHECK(a.rest == b.rest);
                    first = a.rest;
                    last = b.rest;
                }
            }
        }
    }
}

TEST_CASE("delta shortens the weight by the rank letter") {
    for (const TensorSpec& spec :
         {TensorSpec{type_a(2), 6}, TensorSpec{type_a(3), 5}, TensorSpec{type_d(4), 4}}) {
        for (const Weight& lambda : dominant_weights(spec.type, spec.length)) {
            for (const auto& rc : enumerate_rc(spec, lambda)) {
                RiggedConfiguration current = complement(rc);
                Weight remaining = lambda;
                for (int step = 0; step < spec.length; ++step) {
                    const DeltaStep d = delta(current);
                    remaining = sub(remaining, letter_weight(d.rank, spec.type));
                    CHECK(weight_of_configuration(d.rest.config) == remaining);
                    validate_rc(d.rest);  // riggings inside their new rectangles
                    current = d.rest;
                }
            }
        }
    }
}

TEST_CASE("bijection holds at rank five in type D") {
    // exercises the generic middle colours of the vacancy formulas and the
    // longer forward sweep
    for (int L = 0; L <= 3; ++L) {
        const TensorSpec spec{type_d(5), L};
        for (const Weight& lambda : dominant_weights(spec.type, L)) {
            const BijectionTable table(spec, lambda);
            const auto paths = enumerate_paths(spec, lambda);
            CHECK(table.rcs().size() == paths.size());
            for (size_t k = 0; k < table.rcs().size(); ++k)
                CHECK(cocharge(table.rcs()[k]) == -energy(table.images()[k]));
            for (const Path& p : paths) CHECK(table.rc_for(p) != nullptr);
            CHECK(one_dim_sum(spec, lambda).inverted_q() == fermionic_M(spec, lambda));
        }
    }
}

TEST_CASE("psi_su2 goldens") {
    const CartanType a1 = type_a(1);
    const TensorSpec spec{a1, 5};
    CHECK(psi_su2(word(a1, {2, 1, 1, 2, 1})) == rig(spec, {{1, 1}}, {{1, 0}}));
    CHECK(psi_su2(word(a1, {2, 2, 1, 1, 1})) == rig(spec, {{2}}, {{0}}));
    CHECK(psi_su2(word(a1, {2, 1, 2, 1, 1})) == rig(spec, {{1, 1}}, {{0, 0}}));
    CHECK(psi_su2(word(a1, {1, 2, 2, 1, 1})) == rig(spec, {{2}}, {{1}}));
    CHECK(psi_su2(word(a1, {1, 2, 1, 2, 1})) == rig(spec, {{1, 1}}, {{1, 1}}));
    CHECK(psi_su2(word(a1, {1, 1, 1, 1})) == empty_rc({a1, 4}));

    CHECK_THROWS_AS(psi_su2(word(a1, {1, 2})), std::domain_error);
    CHECK_THROWS_AS(psi_su2(word(type_a(2), {1, 1})), std::domain_error);
}

TEST_CASE("psi_su2 records the step table for 21121") {
    const CartanType a1 = type_a(1);
    std::vector<RiggedConfiguration> steps;
    const RiggedConfiguration out = psi_su2(word(a1, {2, 1, 1, 2, 1}), &steps);
    REQUIRE(steps.size() == 5);
    CHECK(steps[0] == empty_rc({a1, 1}));
    CHECK(steps[1] == rig({a1, 2}, {{1}}, {{0}}));
    CHECK(steps[2] == rig({a1, 3}, {{1}}, {{0}}));
    CHECK(steps[3] == rig({a1, 4}, {{1}}, {{0}}));
    CHECK(steps[4] == rig({a1, 5}, {{1, 1}}, {{1, 0}}));
    CHECK(out == rig({a1, 5}, {{1, 1}}, {{1, 0}}));
    // the vacancy number printed beside the growing string: 0, 1, 2, then 1
    CHECK(vacancy(steps[1].config, 1, 1) == 0);
    CHECK(vacancy(steps[2].config, 1, 1) == 1);
    CHECK(vacancy(steps[3].config, 1, 1) == 2);
    CHECK(vacancy(steps[4].config, 1, 1) == 1);
}

TEST_CASE("psi_su2 inverts phi_tilde exhaustively") {
    for (int sites = 0; sites <= 8; ++sites) {
        for (int down = 0; 2 * down <= sites; ++down) {
            const TensorSpec spec{type_a(1), sites};
            const Weight lambda{{sites - down, down}};
            for (const auto& rc : enumerate_rc(spec, lambda))
                CHECK(psi_su2(phi_tilde(rc)) == rc);
            for (const Path& p : enumerate_paths(spec, lambda))
                CHECK(phi_tilde(psi_su2(p)) == p);
        }
    }
}

TEST_CASE("statistics transport: cocharge against energy") {
    const TensorSpec spec{type_a(1), 7};
    for (int down = 0; 2 * down <= 7; ++down) {
        const Weight lambda{{7 - down, down}};
        for (const auto& rc : enumerate_rc(spec, lambda)) {
            const Path p = phi_tilde(rc);
            CHECK(cocharge(rc) == -energy(p));
            CHECK(cocharge(rc) == energy_su2(p));
        }
    }
}

TEST_CASE("rc_from_path inverts phi_tilde and matches psi_su2") {
    const TensorSpec spec{type_a(1), 5};
    const Weight lambda{{3, 2}};
    for (const auto& rc : enumerate_rc(spec, lambda)) CHECK(rc_from_path(phi_tilde(rc)) == rc);
    const Path p = word(type_a(1), {2, 1, 1, 2, 1});
    CHECK(rc_from_path(p) == psi_su2(p));
    CHECK(rc_from_path(word(type_a(4), {3, 4, 2, 3, 1, 2, 1})) == example_a_rc());
    CHECK_THROWS_AS(rc_from_path(word(type_a(1), {1, 2})), std::domain_error);
}

TEST_CASE("bijection table joins both sides") {
    const TensorSpec spec{type_d(4), 3};
    for (const Weight& lambda : dominant_weights(spec.type, spec.length)) {
        const BijectionTable table(spec, lambda);
        const auto paths = enumerate_paths(spec, lambda);
        CHECK(table.rcs().size() == paths.size());
        std::set<std::vector<Letter>> images;
        for (const Path& p : table.images()) {
            CHECK(is_classically_highest(p));
            CHECK(path_weight(p) == lambda);
            images.insert(p.factors);
        }
        CHECK(images.size() == table.rcs().size());  // injectivity
        for (const Path& p : paths) CHECK(table.rc_for(p) != nullptr);
        for (size_t k = 0; k < table.rcs().size(); ++k)
            CHECK(*table.rc_for(table.images()[k]) == table.rcs()[k]);
    }
}
