#include <doctest.h>

#include "permwqo/brute.hpp"
#include "permwqo/errors.hpp"
#include "permwqo/fourier_motzkin.hpp"
#include "permwqo/graph.hpp"
#include "permwqo/grid.hpp"

using namespace permwqo;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

ZeroPmOneMatrix M(const std::vector<std::vector<int>>& rows) { return ZeroPmOneMatrix::from_rows_top_down(rows); }

PermSet set_of(std::initializer_list<const char*> xs) {
    PermSet out;
    for (auto s : xs) out.insert(P(s));
    return out;
}

// The drawn points, read left to right, must reduce to the permutation.
bool drawing_realizes(const GeometricDrawing& d, const ZeroPmOneMatrix& m) {
    auto pts = drawing_points(d, m);
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i - 1].first < pts[i].first)) return false;
    std::vector<Rational> ys;
    for (const auto& p : pts) ys.push_back(p.second);
    return reduce(ys) == d.gridded.perm;
}

}  // namespace

TEST_SUITE("anchors") {
    TEST_CASE("3142 has no drawing on the X figure") {
        const auto x = ZeroPmOneMatrix::x_matrix();
        CHECK(grid_member(P("3142"), x));
        CHECK_FALSE(geom_member(P("3142"), x));
    }

    TEST_CASE("2143 is outside Grid(X)") { CHECK_FALSE(grid_member(P("2143"), ZeroPmOneMatrix::x_matrix())); }

    TEST_CASE("7143526 is drawn on its figure") {
        const auto m = M({{-1, 0, 1}, {1, -1, -1}});
        CHECK(m.at(1, 2) == -1);
        CHECK(m.at(1, 1) == 1);
        const auto d = geom_member(P("7143526"), m);
        REQUIRE(d);
        CHECK(is_valid_gridding(d->gridded, m));
        CHECK(drawing_realizes(*d, m));
    }

    TEST_CASE("Grid(X) at length 4 is Av(2143, 3412)") {
        const auto x = ZeroPmOneMatrix::x_matrix();
        const auto grid4 = enumerate_grid(x, 4, GridKind::monotone);
        CHECK(grid4.size() == 22);
        CHECK(grid4.count(P("2143")) == 0);
        CHECK(grid4.count(P("3412")) == 0);
        auto geom_expected = grid4;
        geom_expected.erase(P("2413"));
        geom_expected.erase(P("3142"));
        CHECK(enumerate_grid(x, 4, GridKind::geometric) == geom_expected);
    }

    TEST_CASE("the cell graph of a vector is a path") {
        CHECK(is_isomorphic(cell_graph(M({{-1, 1, -1, 1}})), Graph::path(4)));
    }
}

TEST_SUITE("trivial") {
    TEST_CASE("matrix indexing") {
        const auto x = ZeroPmOneMatrix::x_matrix();
        CHECK(x.at(1, 2) == -1);
        CHECK(x.at(2, 2) == 1);
        CHECK(x.at(1, 1) == 1);
        CHECK(x.at(2, 1) == -1);
        CHECK(x.rows_top_down() == std::vector<std::vector<int>>{{-1, 1}, {1, -1}});
        CHECK_THROWS_AS(M({{2}}), InvalidInput);
        CHECK_THROWS_AS(M({{1, 0}, {1}}), InvalidInput);
        CHECK_THROWS_AS(ZeroPmOneMatrix(0, 1), InvalidInput);
    }

    TEST_CASE("cell graphs of small matrices") {
        CHECK(is_isomorphic(cell_graph(ZeroPmOneMatrix::x_matrix()), Graph::cycle(4)));
        CHECK(cell_graph(M({{1}})).size() == 1);
        // A zero between two cells in a row blocks nothing: they are still the nearest pair.
        CHECK(cell_graph(M({{1, 0, -1}})).edge_count() == 1);
    }

    TEST_CASE("empty permutation is in every class") {
        CHECK(grid_member(Permutation{}, ZeroPmOneMatrix::x_matrix()));
        CHECK(geom_member(Permutation{}, ZeroPmOneMatrix::x_matrix()));
    }

    TEST_CASE("single-cell classes") {
        CHECK(geom_member(P("321"), M({{-1}})));
        CHECK_FALSE(grid_member(P("12"), M({{-1}})));
        for (std::size_t n = 1; n <= 5; ++n) {
            CHECK(enumerate_grid(M({{1}}), n, GridKind::monotone) == PermSet{Permutation::identity(n)});
            CHECK(enumerate_grid(M({{1}}), n, GridKind::geometric) == PermSet{Permutation::identity(n)});
        }
    }

    TEST_CASE("griddability chains") {
        const auto r321 = griddability_evidence(PermClass({P("321")}), 3);
        CHECK(r321.sum_chain == std::vector<bool>{true, true, true});
        CHECK(r321.skew_chain == std::vector<bool>{true, true, false});
        const auto r21 = griddability_evidence(PermClass({P("21")}), 2);
        CHECK(r21.sum_chain == std::vector<bool>{false, false});
        CHECK(r21.skew_chain == std::vector<bool>{true, false});
        const auto all = griddability_evidence(PermClass{}, 2);
        CHECK(all.sum_chain == std::vector<bool>{true, true});
        CHECK(all.skew_chain == std::vector<bool>{true, true});
        CHECK_FALSE(all.note.empty());
    }

    TEST_CASE("guards") {
        CHECK_THROWS_AS(geom_member(Permutation::identity(11), ZeroPmOneMatrix::x_matrix()), SizeGuardError);
        CHECK_THROWS_AS(enumerate_grid(ZeroPmOneMatrix::x_matrix(), 8, GridKind::monotone), SizeGuardError);
    }

    TEST_CASE("Fourier-Motzkin on tiny systems") {
        // x < 1, -x < 0 is feasible; x < 0, -x < 0 is not; x <= 0, -x <= 0 gives x = 0.
        const Rational one(1), zero(0), minus(-1);
        auto sol = solve_linear_system(1, {{{one}, one, true}, {{minus}, zero, true}});
        REQUIRE(sol);
        CHECK(satisfies(*sol, {{{one}, one, true}, {{minus}, zero, true}}));
        CHECK_FALSE(solve_linear_system(1, {{{one}, zero, true}, {{minus}, zero, true}}));
        sol = solve_linear_system(1, {{{one}, zero, false}, {{minus}, zero, false}});
        REQUIRE(sol);
        CHECK((*sol)[0] == zero);
        CHECK(to_string(Rational(3, 6)) == "1/2");
    }
}

TEST_SUITE("derived") {
    TEST_CASE("Grid(X) equals Av(2143, 3412) up to length 6") {
        const auto x = ZeroPmOneMatrix::x_matrix();
        for (std::size_t n = 0; n <= 6; ++n) {
            PermSet expected;
            for (const auto& pi : all_permutations(n))
                if (brute::avoids_all(pi, {P("2143"), P("3412")})) expected.insert(pi);
            REQUIRE(enumerate_grid(x, n, GridKind::monotone) == expected);
        }
    }

    TEST_CASE("X-matrix counts") {
        const auto x = ZeroPmOneMatrix::x_matrix();
        const std::size_t grid[] = {1, 1, 2, 6, 22, 86, 340};
        const std::size_t geom[] = {1, 1, 2, 6, 20, 68, 232};
        for (std::size_t n = 0; n <= 6; ++n) {
            CHECK(enumerate_grid(x, n, GridKind::monotone).size() == grid[n]);
            CHECK(enumerate_grid(x, n, GridKind::geometric).size() == geom[n]);
        }
    }

    TEST_CASE("Geom(X) is skew-merged and separable up to length 6") {
        const auto x = ZeroPmOneMatrix::x_matrix();
        for (std::size_t n = 0; n <= 6; ++n) {
            PermSet expected;
            for (const auto& pi : all_permutations(n))
                if (brute::avoids_all(pi, {P("2143"), P("3412"), P("2413"), P("3142")})) expected.insert(pi);
            REQUIRE(enumerate_grid(x, n, GridKind::geometric) == expected);
        }
    }

    TEST_CASE("griddings revalidate and drawings realize their permutation") {
        const std::vector<ZeroPmOneMatrix> ms = {ZeroPmOneMatrix::x_matrix(), M({{1, -1}}), M({{1, 1}, {0, -1}}),
                                                 M({{-1, 0, 1}, {1, -1, -1}})};
        for (const auto& m : ms)
            for (std::size_t n = 1; n <= 5; ++n)
                for (const auto& pi : all_permutations(n)) {
                    for (const auto& g : griddings(pi, m)) REQUIRE(is_valid_gridding(g, m));
                    if (auto d = geom_member(pi, m)) {
                        REQUIRE(is_valid_gridding(d->gridded, m));
                        REQUIRE(drawing_realizes(*d, m));
                        REQUIRE(grid_member(pi, m));
                    }
                }
    }

    TEST_CASE("forest matrices have equal classes, the X-matrix does not") {
        const auto forest = M({{1, -1}, {0, 1}});
        CHECK(is_forest(cell_graph(forest)));
        for (std::size_t n = 0; n <= 5; ++n)
            CHECK(enumerate_grid(forest, n, GridKind::monotone) == enumerate_grid(forest, n, GridKind::geometric));
        CHECK_FALSE(is_forest(cell_graph(ZeroPmOneMatrix::x_matrix())));
    }

    TEST_CASE("non-forest verdicts confirmed by an independent LP solve") {
        struct Case {
            const char* perm;
            std::vector<std::vector<int>> rows;
        };
        const std::vector<Case> cases = {{"35827416", {{1, -1}, {-1, -1}}},
                                         {"156342", {{-1, -1}, {-1, -1}}},
                                         {"13542", {{1, 1}, {-1, -1}}},
                                         {"2413", {{-1, 1}, {1, -1}}}};
        for (const auto& c : cases) {
            CHECK(grid_member(P(c.perm), M(c.rows)));
            CHECK_FALSE(geom_member(P(c.perm), M(c.rows)));
        }
    }
}
