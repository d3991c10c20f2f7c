#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "lorenz/grid.hpp"
#include "oracles.hpp"

using namespace lorenz;

namespace {

GridDiagram grid_of(std::vector<int> v) { return build_grid(shuffle_from_vector(LorenzVector(std::move(v)))); }

std::vector<oracle::Hit> hits_of(const GridDiagram& g) {
    std::vector<oracle::Hit> out;
    for (const auto& c : grid_crossings(g)) out.push_back({c.column, c.height, c.sign});
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

boost::property_tree::ptree parse_xml(const std::string& text) {
    std::istringstream in(text);
    boost::property_tree::ptree tree;
    boost::property_tree::read_xml(in, tree);
    return tree;
}

}  // namespace

TEST_CASE("build_grid vertex placement") {
    const auto g = build_grid(Shuffle(2, {3, 4, 1, 2}));
    CHECK(g.n() == 4);
    for (int col = 1; col <= 4; ++col) CHECK(g.o_height(col) == col);
    CHECK(g.x_heights() == std::vector<int>{3, 4, 1, 2});
    CHECK(g.up_columns() == std::vector<int>{1, 2});
    CHECK(g.down_columns() == std::vector<int>{3, 4});
    CHECK(g.x_column(1) == 3);

    const auto tiny = build_grid(Shuffle(1, {2, 1}));
    CHECK(tiny.x_heights() == std::vector<int>{2, 1});
    CHECK(tiny.column_points_up(1));
    CHECK_FALSE(tiny.column_points_up(2));

    const auto fig = grid_of({3, 3, 3, 3, 5, 5, 5});
    CHECK(fig.n() == 12);
    CHECK(fig.x_heights() == std::vector<int>{4, 5, 6, 7, 10, 11, 12, 1, 2, 3, 8, 9});
    CHECK(fig.up_columns().size() == 7);
}

TEST_CASE("grid crossings") {
    const auto hopf = grid_crossings(grid_of({2, 2}));
    REQUIRE(hopf.size() == 2);
    CHECK(hopf[0] == GridCrossing{2, 3, 1});
    CHECK(hopf[1] == GridCrossing{3, 2, 1});

    CHECK(grid_crossings(grid_of({3})).empty());

    const auto trefoil = grid_crossings(grid_of({2, 2, 2}));
    CHECK(trefoil.size() == 3);
    CHECK(std::all_of(trefoil.begin(), trefoil.end(), [](const GridCrossing& c) { return c.sign == 1; }));
}

TEST_CASE("grid_to_planar structure") {
    const auto pd = grid_to_planar(grid_of({2, 2}));
    CHECK(pd.crossing_count() == 2);
    CHECK(pd.arc_count == 4);
    CHECK(pd.components() == 2);
    CHECK(pd.writhe() == 2);

    const auto unknot = grid_to_planar(grid_of({3}));
    CHECK(unknot.crossing_count() == 0);
    CHECK(unknot.arc_count == 1);
}

TEST_CASE("grid_components") {
    CHECK(grid_components(grid_of({2, 2})) == 2);
    CHECK(grid_components(grid_of({3, 3, 3, 3, 5, 5, 5})) == 1);
    CHECK(grid_components(grid_of({1})) == 1);
}

TEST_CASE("render_ascii") {
    CHECK(render_ascii(build_grid(Shuffle(1, {2, 1}))) == "XO\nOX\n");
    CHECK(render_ascii(grid_of({2, 2})) == ".X.O\nX.O.\n.O.X\nO.X.\n");
    const auto art = render_ascii(grid_of({3, 3, 3, 3, 5, 5, 5}));
    CHECK(std::count(art.begin(), art.end(), 'X') == 12);
    CHECK(std::count(art.begin(), art.end(), 'O') == 12);
    CHECK(std::count(art.begin(), art.end(), '\n') == 12);
}

TEST_CASE("render_svg") {
    const auto svg = render_svg(grid_of({2, 2}));
    CHECK(count_substr(svg, "class=\"vertex") == 8);
    CHECK(count_substr(svg, "class=\"edge") == 8);
    CHECK(count_substr(svg, "class=\"gap\"") == 2);
    CHECK_NOTHROW(parse_xml(svg));

    const auto small = render_svg(grid_of({1}));
    CHECK(count_substr(small, "class=\"vertex") == 4);
    CHECK_NOTHROW(parse_xml(small));
    CHECK_NOTHROW(parse_xml(render_svg(grid_of({3, 3, 3, 3, 5, 5, 5}))));
}

TEST_CASE("property: crossings agree with segment geometry and are all positive") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const LorenzVector v(oracle::random_vector(rng));
        CAPTURE(v.to_string());
        const Shuffle s = shuffle_from_vector(v);
        const auto g = build_grid(s);
        const auto hits = hits_of(g);
        CHECK(hits == oracle::grid_intersections(s.images()));
        for (const auto& h : hits) CHECK(h.sign == 1);

        const auto pd = grid_to_planar(g);
        CHECK_NOTHROW(pd.validate());
        CHECK(pd.components() == s.cycle_count());
        CHECK(pd.writhe() == pd.crossing_count());
        CHECK(grid_components(g) == s.cycle_count());
    }
}
