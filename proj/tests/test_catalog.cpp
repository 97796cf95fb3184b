#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gstar/catalog.hpp"
#include "gstar/errors.hpp"

using namespace gstar;
using namespace gstar::catalog;

namespace {

RationalVector unit_vec(int dim, int i) {
    RationalVector v(dim);
    v[i] = 1;
    return v;
}

int label_index(const GStarAlgebra& a, const std::string& label) {
    for (int i = 0; i < a.dim(); ++i)
        if (a.basis_labels()[i] == label) return i;
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("grassmann involutions act as expected on e1e2") {
    FiniteAbelianGroup c4({4});
    GStarAlgebra tau = grassmann(c4, 2, {{1}, {1}}, GrassmannInvolution::tau);
    int e12 = label_index(tau, "e1e2");
    RationalVector img = tau.apply_involution(unit_vec(4, e12));
    CHECK(img[e12] == -1); // (e1e2)^tau = -e1e2, skew of degree g^2
    CHECK(tau.grading()[e12] == GroupElement{2});

    GStarAlgebra gamma = grassmann(c4, 2, {{1}, {1}}, GrassmannInvolution::gamma);
    CHECK(gamma.apply_involution(unit_vec(4, e12))[e12] == 1); // symmetric
}

TEST_CASE("grassmann dimension and basis of G3") {
    GStarAlgebra g3 = grassmann(FiniteAbelianGroup::trivial(), 3,
                                {{0}, {0}, {0}}, GrassmannInvolution::tau);
    CHECK(g3.dim() == 8);
    CHECK(g3.basis_labels() ==
          std::vector<std::string>{"1", "e1", "e2", "e3", "e1e2", "e1e3", "e2e3", "e1e2e3"});
}

TEST_CASE("grassmann anticommutation is encoded exhaustively") {
    FiniteAbelianGroup c2({2});
    GStarAlgebra g = grassmann(c2, 3, {{1}, {1}, {0}}, GrassmannInvolution::psi);
    // generators sit at labels e1,e2,e3
    std::vector<int> gens = {label_index(g, "e1"), label_index(g, "e2"), label_index(g, "e3")};
    for (int i : gens)
        for (int j : gens) {
            RationalVector anti =
                g.multiply(unit_vec(8, i), unit_vec(8, j));
            RationalVector other = g.multiply(unit_vec(8, j), unit_vec(8, i));
            for (int k = 0; k < 8; ++k) CHECK(anti[k] + other[k] == 0);
        }
}

TEST_CASE("commutative chains") {
    FiniteAbelianGroup triv({1});
    GStarAlgebra c3s = commutative_chain(triv, 3, ChainVariant::star);
    int e = label_index(c3s, "E"), e2 = label_index(c3s, "E^2");
    CHECK(c3s.apply_involution(unit_vec(3, e))[e] == -1);
    CHECK(c3s.apply_involution(unit_vec(3, e2))[e2] == 1);

    FiniteAbelianGroup cg2({2});
    GStarAlgebra c2g = commutative_chain(cg2, 2, ChainVariant::graded, GroupElement{1});
    CHECK(c2g.grading() == std::vector<GroupElement>{{0}, {1}});

    // nilpotency of the chain: E^(k-1) * E = 0
    GStarAlgebra c4 = commutative_chain(triv, 4, ChainVariant::plain);
    RationalVector top = unit_vec(4, 3);
    RationalVector prod = c4.multiply(top, unit_vec(4, 1));
    for (const auto& q : prod) CHECK(is_zero(q));

    CHECK_THROWS_AS(commutative_chain(cg2, 2, ChainVariant::graded, GroupElement{0}),
                    InvalidArgument);
    CHECK_THROWS_AS(commutative_chain(triv, 1, ChainVariant::plain), InvalidArgument);
}

TEST_CASE("group algebras") {
    FiniteAbelianGroup c3({3});
    GStarAlgebra fc3 = group_algebra(c3, GroupAlgebraVariant::fc_p, GroupElement{1});
    CHECK(fc3.dim() == 3);
    CHECK(fc3.grading() == std::vector<GroupElement>{{0}, {1}, {2}});
    CHECK(fc3.involution() == RationalMatrix::identity(3)); // trivial involution

    FiniteAbelianGroup c2({2});
    GStarAlgebra star = group_algebra(c2, GroupAlgebraVariant::fc2_star);
    CHECK(star.grading() == std::vector<GroupElement>{{0}, {0}}); // trivial grading
    CHECK(star.apply_involution(unit_vec(2, 1))[1] == -1);        // u is skew

    GStarAlgebra sharp = group_algebra(c2, GroupAlgebraVariant::fc2_sharp, GroupElement{1});
    CHECK(sharp.grading() == std::vector<GroupElement>{{0}, {1}}); // u has degree h
    CHECK(sharp.apply_involution(unit_vec(2, 1))[1] == -1);

    CHECK_THROWS_AS(group_algebra(FiniteAbelianGroup({4}), GroupAlgebraVariant::fc_p,
                                  GroupElement{1}),
                    InvalidArgument); // order 4 is not prime
    CHECK_THROWS_AS(group_algebra(FiniteAbelianGroup({4}), GroupAlgebraVariant::fc2_sharp,
                                  GroupElement{1}),
                    InvalidArgument); // |h| != 2
}

TEST_CASE("reflection algebra M") {
    FiniteAbelianGroup c2({2});
    GStarAlgebra m = reflection_family(c2, 2, ReflectionFamily::m, true, GroupElement{1});
    int e12 = label_index(m, "e12"), e34 = label_index(m, "e34");
    CHECK(m.grading()[e12] == GroupElement{1});
    CHECK(m.grading()[e34] == GroupElement{1});
    RationalVector img = m.apply_involution(unit_vec(4, e12));
    CHECK(img[e34] == 1); // e12 -> e34 under the reflection
    CHECK(m.unit().has_value());
}

TEST_CASE("N2 matches the two-dimensional chain presentation") {
    FiniteAbelianGroup triv({1});
    GStarAlgebra n2 = reflection_family(triv, 2, ReflectionFamily::n, false);
    CHECK(n2.dim() == 2);
    int x = label_index(n2, "e12-e(2k-1,2k)");
    CHECK(n2.apply_involution(unit_vec(2, x))[x] == -1); // skew
    RationalVector sq = n2.multiply(unit_vec(2, x), unit_vec(2, x));
    for (const auto& q : sq) CHECK(is_zero(q));
}

TEST_CASE("N3 graded: e12 - e56 is homogeneous of degree g") {
    FiniteAbelianGroup c2({2});
    GStarAlgebra n3 = reflection_family(c2, 3, ReflectionFamily::n, true, GroupElement{1});
    CHECK(n3.dim() == 5);
    int x = label_index(n3, "e12-e(2k-1,2k)");
    CHECK(n3.grading()[x] == GroupElement{1});
    CHECK(n3.apply_involution(unit_vec(5, x))[x] == -1);
    // A_1 is spanned by I and E, both symmetric
    CHECK(component_basis(n3, {0}, 1).size() == 2);
    CHECK(component_basis(n3, {0}, -1).empty());
    CHECK(component_basis(n3, {1}, 1).size() == 1);  // e13+e46
    CHECK(component_basis(n3, {1}, -1).size() == 2); // e12-e56, e13-e46
}

TEST_CASE("A2 graded by (1,g,1,g)") {
    FiniteAbelianGroup c2({2});
    GStarAlgebra a2 = reflection_family(c2, 2, ReflectionFamily::a, true, GroupElement{1});
    CHECK(a2.dim() == 3);
    CHECK_FALSE(a2.unit().has_value());
    int e12 = label_index(a2, "e12");
    CHECK(a2.grading()[e12] == GroupElement{1});
}

TEST_CASE("W algebra products and involutions") {
    FiniteAbelianGroup v4({2, 2});
    GroupElement g = {1, 0}, h = {0, 1};
    GStarAlgebra w2 = w_algebra(v4, g, h, WInvolution::nu2);
    int u = 1, v = 2, wi = 3;
    CHECK(w2.multiply(unit_vec(4, u), unit_vec(4, v)) == unit_vec(4, wi)); // u*v = w
    CHECK(w2.multiply(unit_vec(4, v), unit_vec(4, u)) == unit_vec(4, wi)); // v*u = w
    CHECK(w2.apply_involution(unit_vec(4, u))[u] == -1);
    CHECK(w2.apply_involution(unit_vec(4, v))[v] == -1);
    CHECK(w2.apply_involution(unit_vec(4, wi))[wi] == 1);

    GStarAlgebra w3 = w_algebra(v4, g, h, WInvolution::nu3);
    CHECK(w3.apply_involution(unit_vec(4, u))[u] == -1);
    CHECK(w3.apply_involution(unit_vec(4, v))[v] == 1);
    CHECK(w3.apply_involution(unit_vec(4, wi))[wi] == -1);
    CHECK(w3.grading()[wi] == GroupElement{1, 1});
}

TEST_CASE("build dispatcher produces validated algebras") {
    CatalogParams p;
    p.group = FiniteAbelianGroup({4});
    p.g = GroupElement{1};
    p.h = GroupElement{1};
    CHECK(build("G2:tau", p).dim() == 4);

    CatalogParams pk;
    pk.k = 4;
    CHECK(build("Ck_star", pk).dim() == 4);
    CHECK(build("C4_star", CatalogParams{}).dim() == 4);

    CatalogParams pw;
    pw.group = FiniteAbelianGroup({2, 2});
    pw.g = GroupElement{1, 0};
    pw.h = GroupElement{0, 1};
    CHECK(build("W:nu1", pw).dim() == 4);

    CatalogParams pn;
    pn.group = FiniteAbelianGroup({2});
    pn.g = GroupElement{1};
    CHECK(build("N3g", pn).dim() == 5);
    CHECK(build("U3_star", CatalogParams{}).dim() == 5);
    CHECK(build("U3,*", CatalogParams{}).dim() == 5); // the alternative spelling
    CHECK(build("A2_star", CatalogParams{}).dim() == 3);

    // direct sums share parameters
    CatalogParams ps;
    ps.group = FiniteAbelianGroup({2});
    ps.g = GroupElement{1};
    CHECK(build("C2_star+C2g", ps).dim() == 4);

    CHECK_THROWS_AS(build("no_such_algebra", CatalogParams{}), InvalidArgument);
    CHECK_THROWS_AS(build("C3g", CatalogParams{}), InvalidArgument); // missing --g
}

TEST_CASE("support matches the graded Grassmann layout") {
    FiniteAbelianGroup c4({4});
    GStarAlgebra g = grassmann(c4, 2, {{1}, {1}}, GrassmannInvolution::tau);
    CHECK(support(g) == std::vector<GroupElement>{{0}, {1}, {2}});
}

TEST_CASE("every catalog family validates over small groups") {
    std::vector<FiniteAbelianGroup> groups = {FiniteAbelianGroup({2}), FiniteAbelianGroup({3}),
                                              FiniteAbelianGroup({4}),
                                              FiniteAbelianGroup({2, 2})};
    for (const FiniteAbelianGroup& G : groups) {
        for (const GroupElement& g : G.all_elements()) {
            if (G.is_identity(g)) continue;
            for (const GroupElement& h : G.all_elements()) {
                for (auto inv : {GrassmannInvolution::psi, GrassmannInvolution::tau,
                                 GrassmannInvolution::gamma})
                    CHECK(validate(grassmann(G, 2, {g, h}, inv)).ok);
            }
            for (int k : {2, 3}) {
                CHECK(validate(commutative_chain(G, k, ChainVariant::graded, g)).ok);
                CHECK(validate(commutative_chain(G, k, ChainVariant::graded_star, g)).ok);
                for (auto fam : {ReflectionFamily::n, ReflectionFamily::u, ReflectionFamily::a})
                    CHECK(validate(reflection_family(G, k, fam, true, g)).ok);
            }
            CHECK(validate(reflection_family(G, 2, ReflectionFamily::m, true, g)).ok);
            for (auto nu : {WInvolution::nu1, WInvolution::nu2, WInvolution::nu3})
                CHECK(validate(w_algebra(G, g, g, nu)).ok);
            if (G.element_order(g) == 2)
                CHECK(validate(group_algebra(G, GroupAlgebraVariant::fc2_sharp, g)).ok);
            int p = G.element_order(g);
            if (p == 2 || p == 3)
                CHECK(validate(group_algebra(G, GroupAlgebraVariant::fc_p, g)).ok);
        }
        CHECK(validate(group_algebra(G, GroupAlgebraVariant::fc2_star)).ok);
        for (int k : {2, 3, 4}) {
            CHECK(validate(commutative_chain(G, k, ChainVariant::plain)).ok);
            CHECK(validate(commutative_chain(G, k, ChainVariant::star)).ok);
            for (auto fam : {ReflectionFamily::n, ReflectionFamily::u, ReflectionFamily::a})
                CHECK(validate(reflection_family(G, k, fam, false)).ok);
        }
    }
}
