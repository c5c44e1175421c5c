#include <doctest.h>

#include "permwqo/errors.hpp"
#include "permwqo/io.hpp"

using namespace permwqo;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST_SUITE("trivial") {
    TEST_CASE("poset round trip") {
        const auto p = io::parse_poset(R"({"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]})");
        CHECK(p.leq(p.index_of("a"), p.index_of("c")));
        const auto q = io::parse_poset(io::poset_json(p));
        CHECK(q.names() == p.names());
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) CHECK(q.leq(i, j) == p.leq(i, j));
        const auto numeric = io::parse_poset(R"({"elements": [1, 2], "leq": [[1, 2]]})");
        CHECK(numeric.leq(numeric.index_of("1"), numeric.index_of("2")));
        CHECK_THROWS_AS(io::parse_poset("{"), InvalidInput);
        CHECK_THROWS_AS(io::parse_poset(R"({"leq": []})"), InvalidInput);
    }

    TEST_CASE("labeled round trip") {
        const auto L = FinitePoset::two_antichain();
        const auto p = io::parse_labeled(R"({"perm": [2, 1], "labels": ["*", "o"]})", L);
        CHECK(p.perm == P("21"));
        CHECK(p.labels == std::vector<std::size_t>{kFilled, kHollow});
        CHECK(io::parse_labeled(io::labeled_json(p, L), L) == p);
        CHECK(io::labeled_str(p, L) == "2 1 | 1:* 2:o");
        CHECK_THROWS_AS(io::parse_labeled(R"({"perm": [1], "labels": ["x"]})", L), InvalidInput);
        CHECK_THROWS_AS(io::parse_labeled(R"({"perm": [1, 1], "labels": ["o", "o"]})", L), InvalidInput);
    }

    TEST_CASE("class round trip") {
        const auto c = io::parse_class(R"({"basis": [[2,4,1,3], [3,1,4,2]], "name": "separable"})");
        CHECK(c.str() == "Av(2413, 3142)");
        CHECK(c.name() == "separable");
        CHECK(io::parse_class(io::class_json(c)) == c);
        CHECK(io::parse_class(R"({"basis": []})").basis().empty());
    }

    TEST_CASE("matrix round trip and the X shorthand") {
        const auto m = io::parse_matrix(R"({"entries": [[-1, 0, 1], [1, -1, -1]]})");
        CHECK(m.cols() == 3);
        CHECK(m.rows() == 2);
        CHECK(m.at(3, 2) == 1);
        CHECK(io::parse_matrix(io::matrix_json(m)) == m);
        CHECK(io::parse_matrix(R"("X")") == ZeroPmOneMatrix::x_matrix());
        CHECK_THROWS_AS(io::parse_matrix(R"({"cols": 2, "entries": [[1]]})"), InvalidInput);
        CHECK_THROWS_AS(io::parse_matrix(R"({"entries": [[3]]})"), InvalidInput);
    }

    TEST_CASE("enumeration CSV") {
        std::map<std::size_t, PermSet> rows;
        rows[2] = {P("12"), P("21")};
        rows[0] = {Permutation{}};
        CHECK(io::enumeration_csv(rows, false) == "length,count\n0,1\n2,2\n");
        CHECK(io::enumeration_csv(rows, true) == "length,count,members\n0,1,\n2,2,1 2;2 1\n");
    }

    TEST_CASE("gridded JSON carries exact parameters") {
        GriddedPermutation g{P("1"), {{1, 1}}};
        const std::vector<Rational> ts = {Rational(1, 2)};
        const auto text = io::gridded_json(g, &ts);
        CHECK(text.find("\"1/2\"") != std::string::npos);
        CHECK(text.find("\"cells\"") != std::string::npos);
    }

    TEST_CASE("missing files are reported") { CHECK_THROWS_AS(io::read_file("/nonexistent/permwqo.json"), InvalidInput); }
}
