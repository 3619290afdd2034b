#include "xm/partition.hpp"
#include "xm/qseries.hpp"

#include <doctest.h>

#include <random>

using namespace xm;

namespace {

Laurent from_pairs(std::initializer_list<std::pair<long, long>> pairs) {
    Laurent p;
    for (const auto& [e, c] : pairs) p.add_term(e, c);
    return p;
}

// independent oracle: expand the box generating function by enumeration
Laurent box_generating_function(int p, int m) {
    Laurent g;
    for (const Partition& rho : partitions_in_box(p, m)) g.add_term(rho.size(), 1);
    return g;
}

Laurent random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), coeff(-4, 4);
    Laurent p;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) p.add_term(expo(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("laurent addition") {
    const Laurent one_plus_q = from_pairs({{0, 1}, {1, 1}});
    CHECK(one_plus_q + Laurent{} == one_plus_q);
    CHECK(Laurent::monomial(2) + Laurent::monomial(2) == Laurent::monomial(2, 2));
    // X(5,2) assembled from two pieces
    const Laurent x52 = from_pairs({{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});
    CHECK(from_pairs({{2, 1}, {3, 1}}) + from_pairs({{4, 1}, {5, 1}, {6, 1}}) == x52);
    // cancellation drops the term entirely
    CHECK(Laurent::monomial(3) + Laurent::monomial(3, -1) == Laurent{});
}

TEST_CASE("laurent multiplication") {
    const Laurent one_plus_q = from_pairs({{0, 1}, {1, 1}});
    CHECK(one_plus_q * Laurent::one() == one_plus_q);
    CHECK(Laurent::monomial(1) * Laurent::monomial(1) == Laurent::monomial(2));
    CHECK(one_plus_q * one_plus_q == from_pairs({{0, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("laurent q inversion") {
    CHECK(Laurent::one().inverted_q() == Laurent::one());
    CHECK(from_pairs({{-2, 1}, {-3, 1}}).inverted_q() == from_pairs({{2, 1}, {3, 1}}));
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        const Laurent p = random_laurent(rng);
        CHECK(p.inverted_q().inverted_q() == p);
    }
}

TEST_CASE("laurent value at one") {
    CHECK(from_pairs({{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}).at_one() == 5);
    CHECK(Laurent{}.at_one() == 0);
    CHECK(q_binomial(3, 2).at_one() == 10);  // binomial(5, 2)
}

TEST_CASE("q_binomial goldens") {
    CHECK(q_binomial(5, 0) == Laurent::one());
    CHECK(q_binomial(0, 5) == Laurent::one());
    CHECK(q_binomial(1, 1) == from_pairs({{0, 1}, {1, 1}}));
    CHECK(q_binomial(2, 2) == from_pairs({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK_THROWS_AS(q_binomial(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(q_binomial(2, -1), std::invalid_argument);
}

TEST_CASE("q_binomial equals box enumeration and satisfies the recurrences") {
    for (int p = 0; p <= 6; ++p)
        for (int m = 0; m <= 6; ++m) {
            const Laurent qb = q_binomial(p, m);
            CHECK(qb == box_generating_function(p, m));
            CHECK(qb == q_binomial(m, p));  // box transpose
            if (p >= 1 && m >= 1)
                CHECK(qb == q_binomial(p, m - 1) + q_binomial(p - 1, m).shifted(m));
        }
}

TEST_CASE("add and mul are commutative and associative") {
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        const Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical text rendering") {
    CHECK(Laurent{}.str() == "0");
    CHECK(Laurent::one().str() == "1");
    CHECK(from_pairs({{2, 1}, {3, 1}, {4, 2}}).str() == "q^2 + q^3 + 2*q^4");
    CHECK(from_pairs({{-2, 1}, {0, 3}, {1, 1}}).str() == "q^-2 + 3 + q");
    CHECK(from_pairs({{0, -1}, {2, -2}}).str() == "-1 - 2*q^2");
}
