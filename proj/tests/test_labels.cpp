#include <doctest.h>

#include <random>

#include "permwqo/antichains.hpp"
#include "permwqo/brute.hpp"
#include "permwqo/errors.hpp"
#include "permwqo/labels.hpp"

using namespace permwqo;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

LabeledPermutation constant(const Permutation& p) { return {p, std::vector<std::size_t>(p.size(), 0)}; }

}  // namespace

TEST_SUITE("anchors") {
    TEST_CASE("last-entry encoding of 287369154") {
        const auto e = last_entry_encoding(P("287369154"));
        CHECK(e.perm == P("27635814"));
        for (std::size_t i = 0; i < e.labels.size(); ++i) {
            const bool hollow = i + 1 == 1 || i + 1 == 4 || i + 1 == 7;
            CHECK(e.labels[i] == (hollow ? kHollow : kFilled));
        }
    }

    TEST_CASE("compass encoding of 571834692 at a = 6") {
        const auto e = compass_encoding(constant(P("571834692")), 6, 1);
        CHECK(e.perm == P("46173582"));
        const Compass expected[] = {Compass::se, Compass::se, Compass::ne, Compass::se,
                                    Compass::ne, Compass::sw, Compass::sw, Compass::nw};
        for (std::size_t i = 0; i < 8; ++i) CHECK(e.labels[i] == compass_label(0, 0, expected[i], 1));
    }

    TEST_CASE("good pair among oscillations") {
        const std::vector<Permutation> seq = {P("231"), P("2413")};
        const auto gp = find_good_pair(seq, [](const Permutation& a, const Permutation& b) { return contains(a, b); });
        REQUIRE(gp);
        CHECK(*gp == std::make_pair<std::size_t, std::size_t>(1, 2));
    }
}

TEST_SUITE("trivial") {
    TEST_CASE("product order over two chains") {
        const std::vector<FinitePoset> ps = {FinitePoset::chain(3), FinitePoset::chain(3)};
        // chain(3) has elements "1","2","3" at indices 0,1,2.
        CHECK(product_leq({0, 1}, {1, 1}, ps));
        CHECK_FALSE(product_leq({0, 2}, {1, 0}, ps));
        CHECK_FALSE(product_leq({1, 0}, {0, 2}, ps));
        CHECK(product_leq({2}, {2}, {FinitePoset::chain(3)}));
        CHECK_THROWS_AS(product_leq({0}, {0, 1}, ps), InvalidInput);
    }

    TEST_CASE("poset closure from a cover relation") {
        const FinitePoset p({"a", "b", "c"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
        CHECK(p.leq(0, 2));
        CHECK(p.leq(1, 1));
        CHECK_FALSE(p.leq(2, 0));
        CHECK(p.is_antisymmetric());
        const FinitePoset q({"x", "y"}, std::vector<std::pair<std::string, std::string>>{{"x", "y"}, {"y", "x"}});
        CHECK_FALSE(q.is_antisymmetric());
        CHECK_THROWS_AS(FinitePoset({"a"}, std::vector<std::pair<std::string, std::string>>{{"a", "z"}}), InvalidInput);
    }

    TEST_CASE("product poset is componentwise") {
        const auto prod = FinitePoset::product({FinitePoset::chain(2), FinitePoset::two_antichain()});
        CHECK(prod.size() == 4);
        CHECK(prod.leq(prod.index_of("(1,o)"), prod.index_of("(2,o)")));
        CHECK_FALSE(prod.leq(prod.index_of("(1,o)"), prod.index_of("(2,*)")));
    }

    TEST_CASE("degenerate labels reduce to containment") {
        const auto one = FinitePoset::singleton();
        CHECK(labeled_contains(constant(P("32514")), constant(P("432679185")), one));
    }

    TEST_CASE("subword order examples") {
        const auto eq = FinitePoset::antichain({"a", "b"});
        CHECK(subword_leq({1, 0}, {0, 1, 0}, eq));
        CHECK_FALSE(subword_leq({0, 1}, {1, 0}, eq));
        const auto ab = FinitePoset::chain(std::vector<std::string>{"a", "b"});
        CHECK(subword_leq({0, 0}, {1, 1}, ab));
        CHECK(subword_leq({}, {}, ab));
    }

    TEST_CASE("reflexive good pair") {
        const std::vector<int> xs = {5, 5};
        CHECK(find_good_pair(xs, [](int a, int b) { return a <= b; }) == std::make_pair<std::size_t, std::size_t>(1, 2));
        const std::vector<int> ys = {3, 2, 1};
        CHECK_FALSE(find_good_pair(ys, [](int a, int b) { return a <= b; }));
    }

    TEST_CASE("last-entry encoding edge cases") {
        CHECK(last_entry_encoding(P("1")).perm.empty());
        const auto e = last_entry_encoding(P("21"));
        CHECK(e.perm == P("1"));
        CHECK(e.labels == std::vector<std::size_t>{kFilled});
        CHECK_THROWS_AS(last_entry_encoding(Permutation{}), InvalidInput);
    }

    TEST_CASE("strip zero labels") {
        const auto L0 = FinitePoset::two_antichain().with_minimum();
        const std::size_t zero = L0.size() - 1;
        const LabeledPermutation p{P("3142"), {zero, kHollow, zero, kFilled}};
        const auto s = strip_zero_labels(p, zero);
        CHECK(s.perm == P("12"));
        CHECK(s.labels == std::vector<std::size_t>{kHollow, kFilled});
        CHECK(strip_zero_labels({P("21"), {zero, zero}}, zero).perm.empty());
        const LabeledPermutation q{P("21"), {kHollow, kFilled}};
        CHECK(strip_zero_labels(q, zero) == q);
    }

    TEST_CASE("compass encoding of 12 at a = 1") {
        const LabeledPermutation p{P("12"), {kHollow, kFilled}};
        const auto e = compass_encoding(p, 1, 2);
        CHECK(e.perm == P("1"));
        CHECK(e.labels == std::vector<std::size_t>{compass_label(kFilled, kHollow, Compass::sw, 2)});
        CHECK_THROWS_AS(compass_encoding(constant(P("1")), 1, 1), InvalidInput);
    }

    TEST_CASE("labels outside the poset are rejected") {
        const auto L = FinitePoset::two_antichain();
        CHECK_THROWS_AS(validate({P("1"), {7}}, L), InvalidInput);
        CHECK_THROWS_AS(validate({P("12"), {0}}, L), InvalidInput);
        CHECK_THROWS_AS(labeled_contains({P("1"), {5}}, {P("1"), {0}}, L), InvalidInput);
    }
}

TEST_SUITE("derived") {
    TEST_CASE("321 labeled (*,o,o) is not in 321 labeled (o,*,o)") {
        const auto L = FinitePoset::two_antichain();
        const LabeledPermutation s{P("321"), {kFilled, kHollow, kHollow}};
        const LabeledPermutation p{P("321"), {kHollow, kFilled, kHollow}};
        CHECK_FALSE(labeled_contains(s, p, L));
        CHECK_FALSE(brute::labeled_contains(s, p, L));
    }

    TEST_CASE("first two labeled oscillations are incomparable") {
        const auto L = FinitePoset::two_antichain();
        const auto a = labeled_antichain_member(1), b = labeled_antichain_member(2);
        CHECK_FALSE(labeled_contains(a, b, L));
        CHECK_FALSE(labeled_contains(b, a, L));
        CHECK_FALSE(brute::labeled_contains(a, b, L));
        CHECK_FALSE(brute::labeled_contains(b, a, L));
    }

    TEST_CASE("one-label containment equals containment") {
        const auto one = FinitePoset::singleton();
        for (std::size_t n = 0; n <= 6; ++n)
            for (const auto& pi : all_permutations(n))
                for (std::size_t k = 0; k <= std::min<std::size_t>(n, 4); ++k)
                    for (const auto& sigma : all_permutations(k))
                        REQUIRE(labeled_contains(constant(sigma), constant(pi), one) == contains(sigma, pi));
    }

    TEST_CASE("labeled containment agrees with brute force") {
        std::mt19937_64 rng(0);
        const auto L = FinitePoset::chain(3);
        for (int t = 0; t < 3000; ++t) {
            const std::size_t n = rng() % 7, k = n ? rng() % (n + 1) : 0;
            auto rp = [&](std::size_t m) {
                std::vector<int> v(m);
                for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<int>(i + 1);
                std::shuffle(v.begin(), v.end(), rng);
                LabeledPermutation out{Permutation(v), {}};
                for (std::size_t i = 0; i < m; ++i) out.labels.push_back(rng() % 3);
                return out;
            };
            const auto s = rp(k), p = rp(n);
            const auto w = labeled_occurrence(s, p, L);
            REQUIRE(w.has_value() == brute::labeled_contains(s, p, L));
            if (w)
                for (std::size_t j = 0; j < k; ++j) CHECK(L.leq(s.labels[j], p.labels[(*w)[j] - 1]));
        }
    }

    TEST_CASE("subword order agrees with brute force") {
        std::mt19937_64 rng(1);
        for (int t = 0; t < 5000; ++t) {
            const std::size_t size = 1 + rng() % 3;
            std::vector<std::pair<std::size_t, std::size_t>> rel;
            for (std::size_t a = 0; a < size; ++a)
                for (std::size_t b = 0; b < size; ++b)
                    if (a != b && rng() % 3 == 0) rel.emplace_back(a, b);
            std::vector<std::string> names;
            for (std::size_t a = 0; a < size; ++a) names.push_back(std::to_string(a));
            const FinitePoset poset(names, rel);
            Word v(rng() % 6), w(rng() % 9);
            for (auto& x : v) x = rng() % size;
            for (auto& x : w) x = rng() % size;
            REQUIRE(subword_leq(v, w, poset) == brute::subword_leq(v, w, poset));
        }
    }

    TEST_CASE("last-entry encoding reflects containment up to length 5") {
        const auto L = FinitePoset::two_antichain();
        std::vector<Permutation> xs;
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& p : all_permutations(n)) xs.push_back(p);
        for (const auto& b : xs)
            for (const auto& g : xs)
                if (labeled_contains(last_entry_encoding(b), last_entry_encoding(g), L)) REQUIRE(brute::contains(b, g));
    }

    TEST_CASE("compass decode inverts encode up to length 5") {
        for (std::size_t n = 2; n <= 5; ++n)
            for (const auto& pi : all_permutations(n))
                for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                    LabeledPermutation p{pi, {}};
                    for (std::size_t i = 0; i < n; ++i) p.labels.push_back(mask >> i & 1u);
                    for (std::size_t a = 1; a <= n; ++a) {
                        const auto [q, at] = compass_decode(compass_encoding(p, a, 2), 2);
                        REQUIRE(q == p);
                        REQUIRE(at == a);
                    }
                }
    }

    TEST_CASE("compass decode rejects inconsistent labels") {
        // A single retained entry cannot have the deleted entry both above and below.
        LabeledPermutation bad{P("12"), {compass_label(0, 0, Compass::sw, 1), compass_label(0, 0, Compass::ne, 1)}};
        CHECK_THROWS_AS(compass_decode(bad, 1), InvalidInput);
    }

    TEST_CASE("labels travel with their points under symmetries") {
        const LabeledPermutation p{P("2314"), {0, 1, 0, 1}};
        const auto inv = apply_symmetry(p, Symmetry::inverse);
        CHECK(inv.perm == P("3124"));
        // The entry 1 at position 3 (label 0) sits at position 1 of the inverse.
        CHECK(inv.labels == std::vector<std::size_t>{0, 0, 1, 1});
        const auto rc = apply_symmetry(p, Symmetry::reverse_complement);
        CHECK(rc.perm == P("1423"));
        CHECK(rc.labels == std::vector<std::size_t>{1, 0, 1, 0});
    }
}
