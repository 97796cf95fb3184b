#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gstar/errors.hpp"
#include "gstar/group.hpp"

using namespace gstar;

TEST_CASE("identity element") {
    CHECK(FiniteAbelianGroup({2, 2}).identity() == GroupElement{0, 0});
    CHECK(FiniteAbelianGroup({4}).identity() == GroupElement{0});
    CHECK(FiniteAbelianGroup({1}).identity() == GroupElement{0});
}

TEST_CASE("multiplication is componentwise modular") {
    FiniteAbelianGroup c4({4});
    CHECK(c4.multiply({3}, {2}) == GroupElement{1});
    FiniteAbelianGroup v({2, 2});
    CHECK(v.multiply({1, 0}, {0, 1}) == GroupElement{1, 1});
    CHECK(v.multiply({1, 1}, v.identity()) == GroupElement{1, 1});
    CHECK_THROWS_AS(c4.multiply({1}, {0, 1}), InvalidArgument);
}

TEST_CASE("element orders") {
    FiniteAbelianGroup c4({4});
    CHECK(c4.element_order({1}) == 4);
    CHECK(c4.element_order({2}) == 2);
    CHECK(FiniteAbelianGroup({2, 2}).element_order({1, 1}) == 2);
    CHECK(c4.element_order({0}) == 1);
}

TEST_CASE("enumeration is identity-first lexicographic") {
    CHECK(FiniteAbelianGroup({2}).all_elements() ==
          std::vector<GroupElement>{{0}, {1}});
    CHECK(FiniteAbelianGroup({2, 2}).all_elements() ==
          std::vector<GroupElement>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(FiniteAbelianGroup({3}).all_elements() ==
          std::vector<GroupElement>{{0}, {1}, {2}});
}

TEST_CASE("group axioms by exhaustion for |G| <= 8") {
    for (const auto& orders : std::vector<std::vector<int>>{{8}, {2, 4}, {2, 2, 2}, {6}, {5}}) {
        FiniteAbelianGroup g(orders);
        auto elems = g.all_elements();
        CHECK(static_cast<long long>(elems.size()) == g.order());
        for (const auto& a : elems) {
            CHECK(g.element_order(a) >= 1);
            CHECK(g.order() % g.element_order(a) == 0); // Lagrange
            CHECK(g.multiply(a, g.inverse(a)) == g.identity());
            for (const auto& b : elems) {
                CHECK(g.multiply(a, b) == g.multiply(b, a));
                for (const auto& c : elems)
                    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
            }
        }
        // no duplicates
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j) CHECK(elems[i] != elems[j]);
    }
}

TEST_CASE("element indexing matches enumeration") {
    FiniteAbelianGroup g({2, 3});
    auto elems = g.all_elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        CHECK(g.element_index(elems[i]) == static_cast<int>(i));
}

TEST_CASE("element text round trip") {
    FiniteAbelianGroup g({2, 2});
    CHECK(g.format_element({1, 0}) == "(1,0)");
    CHECK(g.parse_element("(1,0)") == GroupElement{1, 0});
    CHECK(g.parse_element("(3,1)") == GroupElement{1, 1}); // reduced mod orders
    CHECK_FALSE(g.parse_element("(1)").has_value());
    CHECK_FALSE(g.parse_element("(a,b)").has_value());
    CHECK(FiniteAbelianGroup::parse("2,2").has_value());
    CHECK_FALSE(FiniteAbelianGroup::parse("2,x").has_value());
    CHECK_FALSE(FiniteAbelianGroup::parse("0").has_value());
}
