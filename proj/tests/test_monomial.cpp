#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "polycanon/monomial.hpp"
#include "polycanon/parse.hpp"
#include "testutil.hpp"

using namespace polycanon;
using testutil::Rng;

TEST_CASE("mask primitives index bits and enumerate them back") {
    CHECK(index_bit(1) == 1u);
    CHECK(index_bit(64) == (Mask{1} << 63));
    CHECK(full_mask(0) == 0u);
    CHECK(full_mask(3) == 0b111u);
    CHECK(full_mask(64) == ~Mask{0});
    CHECK(popcount(0b1011u) == 3);
    CHECK(lowest_index(0) == 0);
    CHECK(lowest_index(0b1000u) == 4);
    CHECK(mask_indices(0b10101u) == std::vector<int>{1, 3, 5});
}

TEST_CASE("mask_set_less orders by lowest differing index") {
    CHECK(mask_set_less(index_bit(1), index_bit(2)));
    CHECK_FALSE(mask_set_less(index_bit(2), index_bit(1)));
    CHECK_FALSE(mask_set_less(index_bit(3), index_bit(3)));
    // {1,3} vs {2,3}: index 1 differs and belongs to the left set.
    CHECK(mask_set_less(0b101u, 0b110u));
    // The empty set sorts after anything nonempty.
    CHECK(mask_set_less(index_bit(5), 0));
    CHECK_FALSE(mask_set_less(0, index_bit(5)));
}

TEST_CASE("mask_set_less is a strict total order on random masks") {
    Rng rng(20260814);
    std::uniform_int_distribution<Mask> dist(0, full_mask(10));
    for (int t = 0; t < 2000; ++t) {
        Mask a = dist(rng), b = dist(rng), c = dist(rng);
        CHECK_FALSE(mask_set_less(a, a));
        if (a != b) CHECK(mask_set_less(a, b) != mask_set_less(b, a));
        if (mask_set_less(a, b) && mask_set_less(b, c))
            CHECK(mask_set_less(a, c));
    }
}

TEST_CASE("SfMonomial validates its supports") {
    CHECK_THROWS_AS(SfMonomial(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(SfMonomial(65, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(SfMonomial(2, index_bit(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(SfMonomial(2, 0, index_bit(3)), std::invalid_argument);

    SfMonomial one(3, 0, 0);
    CHECK(one.is_one());
    CHECK(one.degree() == 0);

    SfMonomial m(3, index_bit(1) | index_bit(2), index_bit(2));
    CHECK(m.degree() == 3);
    CHECK(m.boolean_part() == index_bit(2));
}

TEST_CASE("divisibility and lcm follow support containment and union") {
    SfMonomial one(4, 0, 0);
    SfMonomial a(4, index_bit(1), index_bit(3));
    SfMonomial b(4, index_bit(1) | index_bit(2), index_bit(3));

    CHECK(divides(one, a));
    CHECK(divides(a, a));
    CHECK(divides(a, b));
    CHECK_FALSE(divides(b, a));
    CHECK(lcm_sf(a, b) == b);
    CHECK(lcm_sf(a, one) == a);

    SfMonomial wide(5, 0, 0);
    CHECK_THROWS_AS(lcm_sf(a, wide), std::invalid_argument);
    CHECK_THROWS_AS(divides(a, wide), std::invalid_argument);
}

TEST_CASE("shared_indices pairs an x against the other generator's y") {
    MonomialIdeal a = testutil::ideal_of("x1*y2, x3*y1");
    CHECK(shared_indices(a.gens[0], a.gens[1]) == index_bit(1));
    CHECK(shared_indices(a.gens[1], a.gens[0]) == index_bit(1));
    // A Boolean divisor inside one monomial is not a shared index with it.
    SfMonomial self(3, index_bit(1), index_bit(2));
    CHECK(shared_indices(self, self) == 0);
    SfMonomial boolean(3, index_bit(1), index_bit(1));
    CHECK(shared_indices(boolean, boolean) == index_bit(1));
}

TEST_CASE("canonical_less sorts by degree, then x-support, then y-support") {
    std::vector<SfMonomial> gens = testutil::ideal_of(
        "y1*y6, x2*y1*y4*y5, x1*x4*x5, x2*x3*x4*x5, x2*x3*y1", 6).gens;
    std::sort(gens.begin(), gens.end(), canonical_less);
    std::vector<std::string> got;
    for (const SfMonomial& g : gens) got.push_back(format_monomial(g));
    CHECK(got == std::vector<std::string>{"y1*y6", "x1*x4*x5", "x2*x3*y1",
                                          "x2*x3*x4*x5", "x2*y1*y4*y5"});
}

TEST_CASE("pseudomonomials keep sigma and tau disjoint") {
    CHECK_THROWS_AS(Pseudomonomial(3, index_bit(1), index_bit(1)),
                    std::invalid_argument);
    Pseudomonomial f(3, index_bit(1), index_bit(2));
    CHECK(f.sigma == index_bit(1));
    CHECK(f.tau == index_bit(2));
}

TEST_CASE("polarize and depolarize invert each other") {
    Rng rng(7);
    for (int t = 0; t < 500; ++t) {
        SfMonomial m = testutil::random_boolean_free(rng, 8);
        Pseudomonomial f = depolarize(m);
        CHECK(polarize(f) == m);
    }
    Pseudomonomial f(4, index_bit(2), index_bit(1) | index_bit(4));
    CHECK(depolarize(polarize(f)) == f);
}

TEST_CASE("depolarize rejects Boolean-divisible monomials naming the index") {
    SfMonomial m(4, index_bit(2) | index_bit(3), index_bit(3));
    CHECK_THROWS_WITH_AS(depolarize(m),
                         "cannot depolarize: divisible by x3*y3",
                         std::domain_error);
}

TEST_CASE("check_ideal validates widths") {
    MonomialIdeal a{3, {SfMonomial(3, index_bit(1), 0)}};
    CHECK_NOTHROW(check_ideal(a));
    a.gens.push_back(SfMonomial(4, index_bit(1), 0));
    CHECK_THROWS_AS(check_ideal(a), std::invalid_argument);
    MonomialIdeal bad{0, {}};
    CHECK_THROWS_AS(check_ideal(bad), std::invalid_argument);
}

TEST_CASE("same_generator_set ignores order and duplicates") {
    MonomialIdeal a = testutil::ideal_of("x1, x2*y1, x1", 2);
    MonomialIdeal b = testutil::ideal_of("x2*y1, x1", 2);
    CHECK(same_generator_set(a, b));
    MonomialIdeal c = testutil::ideal_of("x2*y1, x2", 2);
    CHECK_FALSE(same_generator_set(a, c));
    CHECK(sorted_generator_set(a).size() == 2);
}

TEST_CASE("parse_monomial accepts stars, whitespace, and (1-x) factors") {
    CHECK(parse_monomial("x1*x2*y3", 3) == SfMonomial(3, 0b011, 0b100));
    CHECK(parse_monomial("x1 x2 y3", 3) == SfMonomial(3, 0b011, 0b100));
    CHECK(parse_monomial("x2*(1-x1)", 2) == SfMonomial(2, 0b10, 0b01));
    CHECK(parse_monomial("1", 2) == SfMonomial(2, 0, 0));
    CHECK(parse_monomial("y2*x1", 2) == parse_monomial("x1*y2", 2));
}

TEST_CASE("parse_monomial reports positions with its errors") {
    CHECK_THROWS_AS(parse_monomial("", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x0", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x4", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1*", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1*q2", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("1*x1", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("(1-y2)", 3), ParseError);
    try {
        parse_monomial("x1*x999", 3, 5);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
        CHECK(e.col == 5);
        CHECK(std::string(e.what()).find("line 5, col 5") != std::string::npos);
    }
}

TEST_CASE("format_monomial round trips random monomials") {
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        SfMonomial m = testutil::random_boolean_free(rng, 9);
        CHECK(parse_monomial(format_monomial(m), 9) == m);
    }
    CHECK(format_monomial(SfMonomial(2, 0, 0)) == "1");
    CHECK(format_monomial(SfMonomial(3, 0b101, 0b010)) == "x1*x3*y2");
}

TEST_CASE("format_depolarized shows (1-x) factors") {
    Pseudomonomial f = depolarize(parse_monomial("x2*y1*y3", 3));
    CHECK(format_depolarized(f) == "x2*(1-x1)*(1-x3)");
    CHECK(format_depolarized(Pseudomonomial(2, 0, 0)) == "1");
}

TEST_CASE("parse_ideal reads headers, comments, and infers widths") {
    MonomialIdeal a = parse_ideal("# polarized input\nn = 5\n\nx1*y2\nx3\n");
    CHECK(a.n == 5);
    CHECK(a.gens.size() == 2);

    MonomialIdeal inferred = parse_ideal("x1*y2\nx4\n");
    CHECK(inferred.n == 4);

    MonomialIdeal forced = parse_ideal("x1\n", 7);
    CHECK(forced.n == 7);

    CHECK(parse_ideal("").gens.empty());
    CHECK_THROWS_AS(parse_ideal("n = 0\nx1\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal("n = 2\nx3\n"), ParseError);
}

TEST_CASE("format_ideal writes one generator per line") {
    MonomialIdeal a = testutil::ideal_of("x1, x2*y1", 2);
    CHECK(format_ideal(a) == "x1\nx2*y1\n");
    MonomialIdeal back = parse_ideal(format_ideal(a), 2);
    CHECK(same_generator_set(a, back));
}
