#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "polycanon/canonical.hpp"
#include "polycanon/canonicity.hpp"
#include "testutil.hpp"

using namespace polycanon;
using testutil::ideal_of;

namespace {

/// All nonconstant Boolean-free monomials over width n.
std::vector<SfMonomial> all_boolean_free(int n) {
    std::vector<SfMonomial> out;
    std::vector<int> digit(n, 0);
    for (;;) {
        int t = 0;
        while (t < n && digit[t] == 2) digit[t++] = 0;
        if (t == n) break;
        ++digit[t];
        Mask xs = 0, ys = 0;
        for (int i = 0; i < n; ++i) {
            if (digit[i] == 1) xs |= index_bit(i + 1);
            if (digit[i] == 2) ys |= index_bit(i + 1);
        }
        out.push_back(SfMonomial(n, xs, ys));
    }
    return out;
}

bool hypotheses_hold(const MonomialIdeal& a) {
    for (std::size_t i = 0; i < a.gens.size(); ++i) {
        if (a.gens[i].boolean_part()) return false;
        for (std::size_t j = 0; j < a.gens.size(); ++j)
            if (i != j && divides(a.gens[i], a.gens[j])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("worked examples get the expected verdicts") {
    CHECK(is_canonical(ideal_of("x1*x2, x3*x4*y1, x2*x3", 4)).canonical);
    CHECK(is_canonical(ideal_of("x1*y2, x3*y2", 3)).canonical);
    CHECK(is_canonical(ideal_of("x1*x3*y2", 3)).canonical);

    CanonicityVerdict v = is_canonical(ideal_of("x1*y2, x3*y1", 3));
    REQUIRE_FALSE(v.canonical);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->j1 == 0);
    CHECK(v.witness->j2 == 1);
    CHECK(v.witness->index == 1);
}

TEST_CASE("precondition failures are reported, not judged") {
    CanonicityVerdict boolean = is_canonical(ideal_of("x2, x1*y1*x3", 3));
    REQUIRE(boolean.precondition.has_value());
    CHECK(boolean.precondition->kind == PreconditionKind::BooleanGenerator);
    CHECK(boolean.precondition->j1 == 1);
    CHECK(boolean.precondition->j2 == 1);

    // the divisor comes first: x1 (position 2) divides x1*x2 (position 0)
    CanonicityVerdict divisor = is_canonical(ideal_of("x1*x2, x3, x1", 3));
    REQUIRE(divisor.precondition.has_value());
    CHECK(divisor.precondition->kind == PreconditionKind::DivisorPair);
    CHECK(divisor.precondition->j1 == 2);
    CHECK(divisor.precondition->j2 == 0);

    CanonicityVerdict dup = is_canonical(ideal_of("x1, x1", 1));
    REQUIRE(dup.precondition.has_value());
    CHECK(dup.precondition->kind == PreconditionKind::DivisorPair);
    CHECK(dup.precondition->j1 == 0);
    CHECK(dup.precondition->j2 == 1);
}

TEST_CASE("the verdict matches recomputation exhaustively at small width") {
    std::vector<SfMonomial> pool = all_boolean_free(3);
    long checked = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            MonomialIdeal a{3, {pool[i], pool[j]}};
            if (!hypotheses_hold(a)) continue;
            ++checked;
            bool fixed = same_generator_set(canonical_full(a).canonical, a);
            CAPTURE(testutil::ideal_to_string(a));
            CHECK(is_canonical(a).canonical == fixed);
        }
    CHECK(checked > 100);
}

TEST_CASE("a canonical verdict survives adding a covering generator") {
    // The witness pair of (x1y2, x3y1) is repaired by the quotient x3y2.
    MonomialIdeal repaired = ideal_of("x1*y2, x3*y1, x3*y2", 3);
    CHECK(is_canonical(repaired).canonical);
}

TEST_CASE("two-generator classification covers every case") {
    TwoGenCase no_shared = classify_two_gen(ideal_of("x1*x2, x3*y4", 4));
    CHECK(no_shared.tag == TwoGenTag::NoShared);
    CHECK(same_generator_set(no_shared.canonical_form,
                             ideal_of("x1*x2, x3*y4", 4)));

    TwoGenCase same_side = classify_two_gen(ideal_of("x1*x2*x3, y1*y2", 3));
    CHECK(same_side.tag == TwoGenTag::MultiSharedSameSide);
    CHECK(same_generator_set(same_side.canonical_form,
                             ideal_of("x1*x2*x3, y1*y2", 3)));

    TwoGenCase mixed = classify_two_gen(ideal_of("x1*y2, x2*y1", 2));
    CHECK(mixed.tag == TwoGenTag::MultiSharedMixed);
    CHECK(same_generator_set(mixed.canonical_form, ideal_of("x1*y2, x2*y1", 2)));

    TwoGenCase add_quot = classify_two_gen(ideal_of("x1*x2, x3*y1", 3));
    CHECK(add_quot.tag == TwoGenTag::OneShared4a);
    CHECK(same_generator_set(add_quot.canonical_form,
                             ideal_of("x1*x2, x3*y1, x2*x3", 3)));

    TwoGenCase absorb_y = classify_two_gen(ideal_of("x1*x2, x2*x3*y1", 3));
    CHECK(absorb_y.tag == TwoGenTag::OneShared4b);
    CHECK(same_generator_set(absorb_y.canonical_form, ideal_of("x1*x2, x2*x3", 3)));

    TwoGenCase absorb_x = classify_two_gen(ideal_of("x1*x2*x3, x3*y1", 3));
    CHECK(absorb_x.tag == TwoGenTag::OneShared4c);
    CHECK(same_generator_set(absorb_x.canonical_form, ideal_of("x2*x3, x3*y1", 3)));

    TwoGenCase collapse = classify_two_gen(ideal_of("x1*x2, x2*y1", 2));
    CHECK(collapse.tag == TwoGenTag::OneShared4d);
    CHECK(same_generator_set(collapse.canonical_form, ideal_of("x2", 2)));
}

TEST_CASE("classification rejects malformed input") {
    CHECK_THROWS_AS(classify_two_gen(ideal_of("x1", 1)), std::invalid_argument);
    CHECK_THROWS_AS(classify_two_gen(ideal_of("x1, x2, x3", 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_two_gen(ideal_of("x1*y1, x2", 2)),
                    std::domain_error);
    CHECK_THROWS_AS(classify_two_gen(ideal_of("x1, x1*x2", 2)),
                    std::domain_error);
}

TEST_CASE("classification closed forms equal the engine exhaustively") {
    std::vector<SfMonomial> pool = all_boolean_free(3);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (i == j) continue;
            if (divides(pool[i], pool[j]) || divides(pool[j], pool[i])) continue;
            MonomialIdeal a{3, {pool[i], pool[j]}};
            TwoGenCase c = classify_two_gen(a);
            CAPTURE(testutil::ideal_to_string(a));
            CHECK(same_generator_set(c.canonical_form,
                                     canonical_full(a).canonical));
        }
}
