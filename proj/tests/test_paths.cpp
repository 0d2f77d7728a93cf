#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace richmult;
using testutil::all_symplectic;
using testutil::brute_paths;
using testutil::cells_of;
using testutil::tup;

static AttachedChains worked_example() {
    return attach(tup({1, 2, 4, 6, 8}, 5), tup({2, 4, 5, 8, 10}, 5),
                  tup({3, 5, 7, 9, 10}, 5));
}

TEST_CASE("path_endpoints on the running example") {
    Grid g = build_grid(tup({2, 4, 5, 8, 10}, 5));

    PathEndpoints a = path_endpoints(Cell{1, 5}, g);
    CHECK(a.floor == Cell{1, 2});
    CHECK(a.ceil == Cell{3, 5});

    PathEndpoints b = path_endpoints(Cell{3, 2}, g);
    CHECK(b.floor == Cell{3, 2});
    CHECK(b.ceil == Cell{3, 2});

    PathEndpoints c = path_endpoints(Cell{6, 10}, g);
    CHECK(c.floor == Cell{6, 8});
    CHECK(c.ceil == Cell{9, 10});

    PathEndpoints e = path_endpoints(Cell{7, 4}, g);
    CHECK(e.floor == Cell{7, 5});
    CHECK(e.ceil == Cell{6, 4});

    PathEndpoints f = path_endpoints(Cell{9, 8}, g);
    CHECK(f.floor == Cell{9, 8});
    CHECK(f.ceil == Cell{9, 8});
}

TEST_CASE("endpoints commute with the reflection") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& b : all_symplectic(d)) {
            Grid g = build_grid(b);
            for (const Cell& x : g.all_cells()) {
                PathEndpoints px = path_endpoints(x, g);
                PathEndpoints ps = path_endpoints(g.sharp(x), g);
                CHECK(g.sharp(px.floor) == ps.ceil);
                CHECK(g.sharp(px.ceil) == ps.floor);
            }
        }
}

TEST_CASE("enumerate_paths on the running example") {
    Grid g = build_grid(tup({2, 4, 5, 8, 10}, 5));

    auto p15 = enumerate_paths(Cell{1, 5}, g);
    REQUIRE(p15.size() == 2);
    CHECK(p15[0] == cells_of({{1, 2}, {1, 4}, {1, 5}, {3, 5}}));
    CHECK(p15[1] == cells_of({{1, 2}, {1, 4}, {3, 4}, {3, 5}}));

    auto p74 = enumerate_paths(Cell{7, 4}, g);
    REQUIRE(p74.size() == 2);
    CHECK(p74[0] == cells_of({{7, 5}, {6, 5}, {6, 4}}));
    CHECK(p74[1] == cells_of({{7, 5}, {7, 4}, {6, 4}}));

    auto p32 = enumerate_paths(Cell{3, 2}, g);
    REQUIRE(p32.size() == 1);
    CHECK(p32[0] == cells_of({{3, 2}}));
}

TEST_CASE("enumerate_paths on a small grid with diagonal anchors") {
    Grid g = build_grid(tup({1, 3}, 2));

    auto pn = enumerate_paths(Cell{2, 3}, g);
    REQUIRE(pn.size() == 1);
    CHECK(pn[0] == cells_of({{2, 3}}));

    auto pp = enumerate_paths(Cell{4, 1}, g);
    REQUIRE(pp.size() == 1);
    CHECK(pp[0] == cells_of({{4, 3}, {4, 1}, {2, 1}}));
}

TEST_CASE("diagonal anchors keep only reflection-symmetric paths") {
    Grid g = build_grid(tup({4, 6, 7, 8}, 4));
    REQUIRE(g.rows == std::vector<int>{1, 2, 3, 5});
    Cell anchor{1, 8};
    REQUIRE(g.diagonal(anchor));

    auto filtered = enumerate_paths(anchor, g);
    CHECK(filtered.size() == 7);
    for (const auto& p : filtered) {
        auto mirrored = sharp_path(p, g);
        std::vector<Cell> a = p, b = mirrored;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }

    // without the symmetry requirement there are strictly more staircases
    auto unfiltered = brute_paths(anchor, g, false);
    CHECK(unfiltered.size() == 19);
    CHECK(brute_paths(anchor, g, true) == filtered);
}

TEST_CASE("enumerate_paths matches the subset reference on small grids") {
    for (int d = 1; d <= 3; ++d)
        for (const auto& b : all_symplectic(d)) {
            Grid g = build_grid(b);
            for (const Cell& r : g.all_cells()) {
                bool filter = g.diagonal(r);
                auto got = enumerate_paths(r, g);
                auto expected = brute_paths(r, g, filter);
                CHECK(got == expected);
                CHECK(!got.empty());
            }
        }
}

TEST_CASE("paths are depth-one sets of uniform sign") {
    for (const auto& b : all_symplectic(3)) {
        Grid g = build_grid(b);
        for (const Cell& r : g.all_cells())
            for (const auto& p : enumerate_paths(r, g)) {
                CHECK(is_depth_one(p));
                for (const Cell& x : p) CHECK(g.sign(x) == g.sign(r));
            }
    }
}

TEST_CASE("reflected paths are paths of the reflected anchor") {
    for (const auto& b : all_symplectic(3)) {
        Grid g = build_grid(b);
        for (const Cell& r : g.all_cells()) {
            if (g.diagonal(r)) continue;
            auto partner = enumerate_paths(g.sharp(r), g);
            for (const auto& p : enumerate_paths(r, g)) {
                auto q = sharp_path(p, g);
                CHECK(std::find(partner.begin(), partner.end(), q) !=
                      partner.end());
            }
        }
    }
}

TEST_CASE("count_path_families on known instances") {
    AttachedChains small = attach(tup({1, 2}, 2), tup({1, 3}, 2), tup({3, 4}, 2));
    FamilyCount fc = count_path_families(small, true);
    CHECK(fc.count == 1);
    REQUIRE(fc.families.size() == 1);
    CHECK(fc.families[0].union_cells() ==
          cells_of({{2, 1}, {2, 3}, {4, 1}, {4, 3}}));

    AttachedChains ac = worked_example();
    FamilyCount wc = count_path_families(ac, true);
    CHECK(wc.count == 4);
    REQUIRE(wc.families.size() == 4);
    CHECK(wc.families[0].union_cells() ==
          cells_of({{1, 2}, {1, 4}, {1, 5}, {3, 2}, {3, 5}, {6, 4}, {6, 5},
                    {6, 8}, {6, 10}, {7, 5}, {7, 10}, {9, 8}, {9, 10}}));
    CHECK(wc.families[1].union_cells() ==
          cells_of({{1, 2}, {1, 4}, {1, 5}, {3, 2}, {3, 5}, {6, 4}, {6, 8},
                    {6, 10}, {7, 4}, {7, 5}, {7, 10}, {9, 8}, {9, 10}}));
    CHECK(wc.families[2].union_cells() ==
          cells_of({{1, 2}, {1, 4}, {3, 2}, {3, 4}, {3, 5}, {6, 4}, {6, 5},
                    {6, 8}, {7, 5}, {7, 8}, {7, 10}, {9, 8}, {9, 10}}));
    CHECK(wc.families[3].union_cells() ==
          cells_of({{1, 2}, {1, 4}, {3, 2}, {3, 4}, {3, 5}, {6, 4}, {6, 8},
                    {7, 4}, {7, 5}, {7, 8}, {7, 10}, {9, 8}, {9, 10}}));

    // counting without listing gives the same number
    CHECK(count_path_families(ac, false).count == 4);
    CHECK(count_path_families(ac, false).families.empty());
}

TEST_CASE("coinciding endpoints give a single empty family") {
    IndexTuple b = tup({2, 4, 5, 8, 10}, 5);
    AttachedChains ac = attach(b, b, b);
    FamilyCount fc = count_path_families(ac, true);
    CHECK(fc.count == 1);
    REQUIRE(fc.families.size() == 1);
    CHECK(fc.families[0].union_cells().empty());
    CHECK(fc.families[0].anchors.empty());
}

TEST_CASE("family members are pairwise disjoint and cover their anchors") {
    AttachedChains ac = worked_example();
    FamilyCount fc = count_path_families(ac, true);
    for (const auto& fam : fc.families) {
        std::vector<Cell> seen;
        for (const auto& p : fam.paths)
            for (const Cell& x : p) seen.push_back(x);
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        REQUIRE(fam.anchors.size() == fam.paths.size());
        for (size_t i = 0; i < fam.anchors.size(); ++i) {
            PathEndpoints ep = path_endpoints(fam.anchors[i], ac.grid);
            REQUIRE(!fam.paths[i].empty());
            CHECK(fam.paths[i].front() == ep.floor);
            CHECK(fam.paths[i].back() == ep.ceil);
        }
    }
}
