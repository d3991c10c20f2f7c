#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lorenz/invariants.hpp"
#include "oracles.hpp"

using namespace lorenz;

namespace {

LaurentPoly from_oracle(const oracle::Poly& p) {
    std::map<int, LaurentPoly::Coeff> m(p.begin(), p.end());
    return LaurentPoly::from_map(m);
}

LaurentPoly poly(std::initializer_list<std::pair<int, LaurentPoly::Coeff>> terms) {
    return LaurentPoly::from_terms(terms);
}

BraidWord word(int strands, std::vector<int> letters) { return BraidWord::from_signed(strands, letters); }

// (s1 ... s_{p-1})^q
BraidWord torus_word(int p, int q) {
    std::vector<int> letters;
    for (int r = 0; r < q; ++r)
        for (int i = 1; i < p; ++i) letters.push_back(i);
    return word(p, letters);
}

LaurentPoly f_of(const BraidWord& w, int cap = kDefaultMaxBracketCrossings) {
    const auto pd = closure_planar(w);
    const auto out = normalized_f(pd, pd.writhe(), cap);
    REQUIRE(out.computed());
    return out.value;
}

LaurentPoly bracket_of(const BraidWord& w) {
    const auto out = kauffman_bracket(closure_planar(w));
    REQUIRE(out.computed());
    return out.value;
}

}  // namespace

TEST_CASE("burau_reduced base cases") {
    const auto m1 = burau_reduced(word(2, {1}));
    REQUIRE(m1.size() == 1);
    CHECK(m1[0][0] == poly({{1, -1}}));
    CHECK(burau_reduced(word(2, {1, 1, 1}))[0][0] == poly({{3, -1}}));

    const auto id = burau_reduced(BraidWord(4));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(id[i][j] == LaurentPoly(i == j ? 1 : 0));

    const auto g2 = burau_reduced(word(4, {2}));
    CHECK(g2[1][0] == poly({{1, 1}}));
    CHECK(g2[1][1] == poly({{1, -1}}));
    CHECK(g2[1][2] == LaurentPoly(1));
    CHECK(g2[0][0] == LaurentPoly(1));

    CHECK_THROWS_AS(burau_reduced(BraidWord(1)), InvalidInput);
}

TEST_CASE("burau_reduced respects braid relations and inverses") {
    CHECK(burau_reduced(word(3, {1, 2, 1})) == burau_reduced(word(3, {2, 1, 2})));
    CHECK(burau_reduced(word(4, {1, 3})) == burau_reduced(word(4, {3, 1})));
    CHECK(burau_reduced(word(4, {2, -2, 3, -3})) == burau_reduced(BraidWord(4)));
    CHECK(burau_reduced(word(4, {-1, 1})) == burau_reduced(BraidWord(4)));
}

TEST_CASE("determinant") {
    LaurentMatrix m{{poly({{1, 1}}), LaurentPoly(1)}, {LaurentPoly(1), poly({{-1, 1}})}};
    CHECK(determinant(m) == LaurentPoly());  // t * t^-1 - 1
    LaurentMatrix swap_needed{{LaurentPoly(), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly()}};
    CHECK(determinant(swap_needed) == LaurentPoly(-1));
    CHECK(determinant({}) == LaurentPoly(1));
    LaurentMatrix three{{LaurentPoly(2), LaurentPoly(0), LaurentPoly(1)},
                        {LaurentPoly(1), LaurentPoly(3), LaurentPoly(2)},
                        {LaurentPoly(1), LaurentPoly(1), LaurentPoly(2)}};
    CHECK(determinant(three) == LaurentPoly(6));
}

TEST_CASE("alexander known values") {
    CHECK(alexander(word(2, {1, 1, 1})) == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(alexander(word(2, {1})) == LaurentPoly(1));
    CHECK(alexander(word(2, {1, 1})) == poly({{0, 1}, {1, -1}}));
    // figure-eight knot
    CHECK(alexander(word(3, {1, -2, 1, -2})) == poly({{0, 1}, {1, -3}, {2, 1}}));
    // single strand closes to the unknot
    CHECK(alexander(BraidWord(1)) == LaurentPoly(1));
    // split link of two unknots
    CHECK(alexander(BraidWord(2)).is_zero());
}

TEST_CASE("alexander agrees with the torus knot formula") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {3, 7}}) {
        CAPTURE(p);
        CAPTURE(q);
        CHECK(equal_up_to_units(alexander(torus_word(p, q)), from_oracle(oracle::torus_knot_alexander(p, q))));
        CHECK(equal_up_to_units(alexander(torus_word(q, p)), from_oracle(oracle::torus_knot_alexander(p, q))));
    }
}

TEST_CASE("kauffman bracket examples") {
    PlanarDiagram unknot;
    unknot.arc_count = 1;
    CHECK(kauffman_bracket(unknot).value == LaurentPoly(1));
    CHECK(bracket_of(word(2, {1})) == poly({{3, -1}}));
    CHECK(bracket_of(word(2, {-1})) == poly({{-3, -1}}));
    CHECK(bracket_of(word(2, {1, 1})) == poly({{4, -1}, {-4, -1}}));
    // two unlinked circles
    CHECK(bracket_of(BraidWord(2)) == poly({{2, -1}, {-2, -1}}));
}

TEST_CASE("normalized f examples") {
    CHECK(f_of(word(2, {1})) == LaurentPoly(1));
    CHECK(f_of(word(2, {1, 1})) == poly({{-2, -1}, {-10, -1}}));
    CHECK(f_of(word(2, {1, 1, 1})) == poly({{-16, -1}, {-12, 1}, {-4, 1}}));
    // left-handed trefoil is the mirror A -> A^-1
    CHECK(f_of(word(2, {-1, -1, -1})) == poly({{16, -1}, {12, 1}, {4, 1}}));
    // figure-eight is amphichiral
    CHECK(f_of(word(3, {1, -2, 1, -2})) == f_of(word(3, {1, -2, 1, -2})).substitute_power(-1));
}

TEST_CASE("normalized f agrees with the torus knot Jones formula") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}}) {
        CAPTURE(p);
        CAPTURE(q);
        const auto expected = from_oracle(oracle::jones_to_f(oracle::torus_knot_jones(p, q)));
        CHECK(f_of(torus_word(p, q)) == expected);
        CHECK(f_of(torus_word(q, p)) == expected);
    }
}

TEST_CASE("bracket changes by -A^3 under a kink, f does not") {
    CHECK(bracket_of(word(2, {1})) == bracket_of(BraidWord(1)) * poly({{3, -1}}));
    CHECK(f_of(word(2, {1})) == f_of(BraidWord(1)));
    CHECK(bracket_of(word(3, {1, 1, 1, 2})) == bracket_of(word(2, {1, 1, 1})) * poly({{3, -1}}));
    CHECK(bracket_of(word(3, {1, 1, 1, -2})) == bracket_of(word(2, {1, 1, 1})) * poly({{-3, -1}}));
    CHECK(f_of(word(3, {1, 1, 1, 2})) == f_of(word(2, {1, 1, 1})));
    CHECK(f_of(word(3, {1, 1, 1, -2})) == f_of(word(2, {1, 1, 1})));
}

TEST_CASE("property: f and alexander are invariant under braid moves") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> strands(2, 5), len(0, 9), sign(0, 1);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = strands(rng);
        std::uniform_int_distribution<int> gen(1, n - 1);
        std::vector<int> letters(len(rng));
        for (auto& l : letters) l = gen(rng) * (sign(rng) ? 1 : -1);
        const auto w = word(n, letters);
        CAPTURE(w.to_text());

        // conjugation by a generator
        const int g = gen(rng);
        std::vector<int> conj{g};
        conj.insert(conj.end(), letters.begin(), letters.end());
        conj.push_back(-g);
        const auto wc = word(n, conj);
        CHECK(f_of(wc) == f_of(w));
        CHECK(alexander(wc) == alexander(w));

        // positive and negative Markov stabilization
        for (int s : {1, -1}) {
            std::vector<int> stab = letters;
            stab.push_back(s * n);
            const auto ws = word(n + 1, stab);
            CHECK(f_of(ws) == f_of(w));
            CHECK(alexander(ws) == alexander(w));
        }

        // inserting a cancelling pair
        std::vector<int> padded = letters;
        padded.insert(padded.begin() + static_cast<long>(padded.size() / 2), {g, -g});
        CHECK(f_of(word(n, padded)) == f_of(w));
    }
}

TEST_CASE("crossing limit is reported, not truncated") {
    const auto pd = closure_planar(torus_word(2, 9));
    const auto out = kauffman_bracket(pd, 8);
    CHECK(out.status == KauffmanOutcome::Status::skipped_crossing_limit);
    CHECK(out.crossings == 9);
    CHECK(out.status_text() == "skipped: crossing limit");
    CHECK(normalized_f(pd, pd.writhe(), 8).status == KauffmanOutcome::Status::skipped_crossing_limit);
    CHECK(kauffman_bracket(pd, 9).computed());
}

TEST_CASE("partitioned state sum matches the single-threaded one") {
    for (auto [p, q] : {std::pair{2, 17}, {3, 8}}) {
        const auto pd = closure_planar(torus_word(p, q));
        const auto serial = kauffman_bracket(pd, kDefaultMaxBracketCrossings, 1);
        const auto split = kauffman_bracket(pd, kDefaultMaxBracketCrossings, 4);
        REQUIRE(serial.computed());
        CHECK(split.value == serial.value);
        const auto f = normalized_f(pd, pd.writhe(), kDefaultMaxBracketCrossings);
        CHECK(f.value == from_oracle(oracle::jones_to_f(oracle::torus_knot_jones(p, q))));
    }
}

TEST_CASE("jones_from_f") {
    const auto v = jones_from_f(poly({{-16, -1}, {-12, 1}, {-4, 1}}));
    REQUIRE(v);
    CHECK(*v == poly({{4, -1}, {3, 1}, {1, 1}}));
    CHECK_FALSE(jones_from_f(poly({{-2, -1}, {-10, -1}})));
}

TEST_CASE("full_report") {
    const auto lw = lorenz_word(shuffle_from_vector(LorenzVector({2, 2, 2})));
    const auto r = full_report(lw, Source::lorenz_braid);
    CHECK(r.components == 1);
    CHECK(r.euler_characteristic == -1);
    CHECK(r.genus == 1);
    REQUIRE(r.alexander);
    CHECK(*r.alexander == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(r.kauffman_f.value == poly({{-16, -1}, {-12, 1}, {-4, 1}}));

    const auto rt = full_report(tlink_word(TLinkParams({{2, 3}})), Source::t_braid);
    CHECK(rt.components == r.components);
    CHECK(rt.euler_characteristic == r.euler_characteristic);
    CHECK(rt.genus == r.genus);
    CHECK(*rt.alexander == *r.alexander);
    CHECK(rt.kauffman_f.value == r.kauffman_f.value);

    const auto rg = full_report(build_grid(shuffle_from_vector(LorenzVector({2, 2, 2}))));
    CHECK(rg.source == Source::grid);
    CHECK(rg.components == 1);
    CHECK_FALSE(rg.euler_characteristic);
    CHECK_FALSE(rg.alexander);
    CHECK(rg.kauffman_f.value == r.kauffman_f.value);

    ReportOptions off;
    off.skip_jones = true;
    off.skip_alexander = true;
    const auto skipped = full_report(lw, Source::lorenz_braid, off);
    CHECK(skipped.kauffman_f.status == KauffmanOutcome::Status::disabled);
    CHECK_FALSE(skipped.alexander);

    CHECK(source_from_tag(source_tag(Source::t_braid)) == Source::t_braid);
    CHECK_THROWS_AS(source_from_tag("nope"), InvalidInput);
}
