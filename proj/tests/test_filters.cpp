#include <doctest.h>

#include "helpers.hpp"
#include "reslat/filters.hpp"

using namespace reslat;
using testutil::elem;
using testutil::filter_of;
using testutil::load_fixture;
using testutil::mask;

TEST_CASE("the example filter lattice has exactly the eight published filters")
{
    auto a = load_fixture("ex31_corrected.lat");
    FilterLattice fl = all_filters(a);
    REQUIRE(fl.all.size() == 8);
    CHECK(fl.all[0].members == mask(a, {"1"}));
    CHECK(fl.all[1].members == mask(a, {"c", "1"}));
    CHECK(fl.all[2].members == mask(a, {"e", "1"}));
    CHECK(fl.all[3].members == mask(a, {"f", "1"}));
    CHECK(fl.all[4].members == mask(a, {"a", "c", "e", "1"}));
    CHECK(fl.all[5].members == mask(a, {"b", "c", "f", "1"}));
    CHECK(fl.all[6].members == mask(a, {"d", "e", "f", "1"}));
    CHECK(fl.all[7].members == a.universe());

    CHECK(fl.maximal_indices == std::vector<int>{4, 5, 6});
    CHECK(fl.radical_index == 0);
    CHECK(fl.radical().members == mask(a, {"1"}));
    CHECK(!is_local(a));
}

TEST_CASE("generated filters match the published ones")
{
    auto a = load_fixture("ex31_corrected.lat");
    CHECK(generated_filter(a, 0).members == mask(a, {"1"}));
    CHECK(generated_filter(a, mask(a, {"1"})).members == mask(a, {"1"}));
    CHECK(generated_filter(a, mask(a, {"c"})).members == mask(a, {"c", "1"}));
    CHECK(generated_filter(a, mask(a, {"a"})).members == mask(a, {"a", "c", "e", "1"}));
}

TEST_CASE("filter joins: unit, absorption, and a comaximal pair")
{
    auto a = load_fixture("ex31_corrected.lat");
    Filter top_only = filter_of(a, {"1"});
    Filter f2 = filter_of(a, {"c", "1"});
    Filter f3 = filter_of(a, {"e", "1"});
    Filter f5 = filter_of(a, {"a", "c", "e", "1"});
    Filter f7 = filter_of(a, {"d", "e", "f", "1"});

    CHECK(filter_join(a, f2, top_only).members == f2.members);
    CHECK(filter_join(a, f3, f5).members == f5.members);
    CHECK(filter_join(a, f2, f7).members == a.universe()); // witness c*d = 0
}

TEST_CASE("comaximality: witness pairs and negative cases")
{
    auto a = load_fixture("ex31_corrected.lat");
    Filter f2 = filter_of(a, {"c", "1"});
    Filter f3 = filter_of(a, {"e", "1"});
    Filter f6 = filter_of(a, {"b", "c", "f", "1"});

    auto w = comaximal_witness(a, f6, f3);
    REQUIRE(w);
    CHECK(w->x == elem(a, "b"));
    CHECK(w->y == elem(a, "e"));
    CHECK(is_comaximal(a, f6, f3));

    CHECK(!is_comaximal(a, f2, f3));
    for (Elem x : f2.elements())
        for (Elem y : f3.elements())
            CHECK(a.mult(x, y) != 0); // the derived reason
    CHECK(!is_comaximal(a, f2, f2)); // join of a proper filter with itself
}

TEST_CASE("idempotent generators")
{
    auto a = load_fixture("ex31_corrected.lat");
    CHECK(idempotent_generator(a, filter_of(a, {"1"})) == a.top());
    CHECK(idempotent_generator(a, filter_of(a, {"a", "c", "e", "1"})) == elem(a, "a"));

    auto b = load_fixture("ex38.lat");
    CHECK(idempotent_generator(b, filter_of(b, {"b", "c", "e", "g", "1"})) == elem(b, "b"));
}

TEST_CASE("ten-element example has two maximal filters and trivial radical")
{
    auto a = load_fixture("ex38.lat");
    FilterLattice fl = all_filters(a);
    REQUIRE(fl.maximal_indices.size() == 2);
    CHECK(fl.all[fl.maximal_indices[0]].members == mask(a, {"h", "1"}));
    CHECK(fl.all[fl.maximal_indices[1]].members == mask(a, {"b", "c", "e", "g", "1"}));
    CHECK(fl.radical().members == mask(a, {"1"}));
    CHECK(!fl.radical().contains(elem(a, "h")));
    CHECK(!fl.radical().contains(elem(a, "b")));
}

TEST_CASE("girth-four example: filters and the two six-element maximal filters")
{
    auto a = load_fixture("ex313.lat");
    FilterLattice fl = all_filters(a);
    auto has = [&](std::initializer_list<const char *> names) {
        ElemSet m = mask(a, names);
        for (const auto &f : fl.all)
            if (f.members == m)
                return true;
        return false;
    };
    CHECK(has({"d", "e", "1"}));
    CHECK(has({"f", "g", "1"}));
    CHECK(has({"a", "c", "d", "e", "g", "1"}));
    CHECK(has({"b", "c", "e", "f", "g", "1"}));

    REQUIRE(fl.maximal_indices.size() == 2);
    CHECK(fl.all[fl.maximal_indices[0]].members == mask(a, {"a", "c", "d", "e", "g", "1"}));
    CHECK(fl.all[fl.maximal_indices[1]].members == mask(a, {"b", "c", "e", "f", "g", "1"}));
}

TEST_CASE("prime filters: maximals are prime here, chains are entirely prime")
{
    auto a = load_fixture("ex31_corrected.lat");
    FilterLattice fl = all_filters(a);
    for (int mi : fl.maximal_indices)
        CHECK(std::find(fl.prime_indices.begin(), fl.prime_indices.end(), mi) !=
              fl.prime_indices.end());

    Matrix leq = {{1, 1}, {0, 1}};
    Matrix mult = {{0, 0}, {0, 1}};
    auto two = build(leq, mult);
    REQUIRE(two);
    auto primes = prime_filters(*two.algebra);
    REQUIRE(primes.size() == 1);
    CHECK(primes[0].members == 0b10u);

    // 3-chain: every proper filter is prime
    Matrix leq3 = {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
    Matrix mult3 = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
    auto three = build(leq3, mult3);
    REQUIRE(three);
    FilterLattice fl3 = all_filters(*three.algebra);
    for (size_t i = 0; i < fl3.all.size(); ++i)
        if (fl3.all[i].proper())
            CHECK(std::find(fl3.prime_indices.begin(), fl3.prime_indices.end(),
                            static_cast<int>(i)) != fl3.prime_indices.end());
    CHECK(is_local(*three.algebra));
}

TEST_CASE("canonical filter order sorts by cardinality then member lists")
{
    Filter a{0b1001, 4}, b{0b0110, 4}, c{0b1000, 4};
    CHECK(filter_less(c, a)); // smaller cardinality first
    CHECK(filter_less(a, b)); // {0,3} before {1,2}
    CHECK(!filter_less(b, a));
    CHECK(!filter_less(a, a));
}
