#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gstar/algebra.hpp"
#include "gstar/algebra_io.hpp"
#include "gstar/catalog.hpp"
#include "gstar/errors.hpp"

using namespace gstar;

namespace {

GStarAlgebra g2_tau_gg() {
    FiniteAbelianGroup c4({4});
    return catalog::grassmann(c4, 2, {{1}, {1}}, catalog::GrassmannInvolution::tau);
}

bool spans_match(const std::vector<RationalVector>& got,
                 const std::vector<RationalVector>& expected, int dim) {
    RankTracker a(dim), b(dim), both(dim);
    for (const auto& v : got) {
        a.add_row(v);
        both.add_row(v);
    }
    for (const auto& v : expected) {
        b.add_row(v);
        both.add_row(v);
    }
    return a.rank() == b.rank() && b.rank() == both.rank();
}

RationalVector unit_vec(int dim, int i) {
    RationalVector v(dim);
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("validate accepts catalog algebras and the trivial algebra") {
    CHECK(validate(g2_tau_gg()).ok);
    CHECK(validate(catalog::trivial_unital(FiniteAbelianGroup::trivial())).ok);
}

TEST_CASE("validate reports a perturbed structure constant with a witness") {
    GStarAlgebra a = g2_tau_gg();
    // perturb 1*e1 from e1 to 2e1: (1*1)*e1 != 1*(1*e1)
    a.add_product_term(0, 1, 1, 1);
    ValidationReport report = validate(a);
    CHECK_FALSE(report.ok);
    bool found_assoc = false;
    std::string witness;
    for (const auto& v : report.violations)
        if (v.axiom == "associativity") {
            found_assoc = true;
            witness = v.witness;
        }
    CHECK(found_assoc);
    CHECK(witness.find("e1") != std::string::npos); // names the failing triple

    // perturbing e1*e2 instead breaks the involution compatibility
    GStarAlgebra b = g2_tau_gg();
    b.add_product_term(1, 2, 3, 1);
    ValidationReport r2 = validate(b);
    CHECK_FALSE(r2.ok);
    bool found_anti = false;
    for (const auto& v : r2.violations)
        if (v.axiom == "involution anti-multiplicative") found_anti = true;
    CHECK(found_anti);
}

TEST_CASE("component bases of the graded Grassmann algebra") {
    GStarAlgebra a = g2_tau_gg();
    GroupElement g = {1}, g2 = {2};

    auto skew_g = component_basis(a, g, -1);
    CHECK(skew_g.size() == 2); // e1, e2
    CHECK(component_basis(a, g, +1).empty());
    CHECK(component_basis(a, g2, -1).size() == 1); // e1e2
    CHECK(spans_match(skew_g, {unit_vec(4, 1), unit_vec(4, 2)}, 4));

    // exact eigenvectors
    for (int sign : {+1, -1})
        for (const GroupElement& e : a.group().all_elements())
            for (const auto& v : component_basis(a, e, sign)) {
                RationalVector sv = a.apply_involution(v);
                for (int i = 0; i < a.dim(); ++i) CHECK(sv[i] == sign * v[i]);
            }

    // eigenspace decomposition covers the whole algebra
    std::size_t total = 0;
    for (const GroupElement& e : a.group().all_elements())
        total += component_basis(a, e, 1).size() + component_basis(a, e, -1).size();
    CHECK(total == static_cast<std::size_t>(a.dim()));
}

TEST_CASE("support") {
    GStarAlgebra a = g2_tau_gg();
    CHECK(support(a) == std::vector<GroupElement>{{0}, {1}, {2}});
    CHECK(support(catalog::trivial_unital(FiniteAbelianGroup({3}))) ==
          std::vector<GroupElement>{{0}});
    FiniteAbelianGroup c3({3});
    GStarAlgebra fc3 = catalog::group_algebra(c3, catalog::GroupAlgebraVariant::fc_p,
                                              GroupElement{1});
    CHECK(support(fc3) == c3.all_elements());
}

TEST_CASE("direct sums") {
    FiniteAbelianGroup c2({2});
    GStarAlgebra a =
        catalog::commutative_chain(c2, 2, catalog::ChainVariant::star);
    GStarAlgebra b =
        catalog::commutative_chain(c2, 2, catalog::ChainVariant::graded, GroupElement{1});
    GStarAlgebra s = direct_sum(a, b);
    CHECK(s.dim() == 4);
    CHECK(validate(s).ok);
    CHECK_FALSE(s.unit().has_value());

    GStarAlgebra other = catalog::trivial_unital(FiniteAbelianGroup({3}));
    CHECK_THROWS_AS(direct_sum(a, other), InvalidArgument);
}

TEST_CASE("radical of chains, fields and Grassmann algebras") {
    FiniteAbelianGroup triv({1});
    GStarAlgebra c3s = catalog::commutative_chain(triv, 3, catalog::ChainVariant::star);
    auto rad = radical(c3s);
    CHECK(spans_match(rad, {unit_vec(3, 1), unit_vec(3, 2)}, 3)); // E, E^2

    CHECK(radical(catalog::trivial_unital(triv)).empty());

    GStarAlgebra g2 = g2_tau_gg();
    auto rad2 = radical(g2);
    CHECK(rad2.size() == 3); // e1, e2, e1e2

    // nilpotency witness: every radical vector has x^dim = 0, and the trace
    // form has rank dim - |radical|
    for (const GStarAlgebra& a : {c3s, g2}) {
        for (const auto& x : radical(a)) {
            RationalVector power = x;
            for (int i = 1; i < a.dim(); ++i) power = a.multiply(power, x);
            for (const auto& q : power) CHECK(is_zero(q));
        }
    }
}

TEST_CASE("peirce decomposition of the matrix example") {
    // M = span{e11+e44, e22+e33, e12, e34}, e = e11+e44, J = span{e12, e34}
    FiniteAbelianGroup triv({1});
    GStarAlgebra m =
        catalog::reflection_family(triv, 2, catalog::ReflectionFamily::m, false);
    RationalVector e = unit_vec(4, 0);
    std::vector<RationalVector> j = {unit_vec(4, 2), unit_vec(4, 3)};
    PeirceDecomposition pd = peirce_decompose(m, e, j);
    CHECK(spans_match(pd.j10, {unit_vec(4, 2)}, 4)); // e12
    CHECK(spans_match(pd.j01, {unit_vec(4, 3)}, 4)); // e34
    CHECK(pd.j00.empty());
    CHECK(pd.j11.empty());

    // oracle: the defining equations, checked by direct multiplication
    for (const auto& v : pd.j10) {
        RationalVector ev = m.multiply(e, v), ve = m.multiply(v, e);
        CHECK(ev == v);
        for (const auto& q : ve) CHECK(is_zero(q));
    }
}

TEST_CASE("peirce decomposition trivial and radical-default cases") {
    FiniteAbelianGroup triv({1});
    GStarAlgebra f = catalog::trivial_unital(triv);
    PeirceDecomposition pd = peirce_decompose(f, *f.unit());
    CHECK(pd.j00.empty());
    CHECK(pd.j10.empty());
    CHECK(pd.j01.empty());
    CHECK(pd.j11.empty());

    GStarAlgebra c3s = catalog::commutative_chain(triv, 3, catalog::ChainVariant::star);
    PeirceDecomposition pc = peirce_decompose(c3s, *c3s.unit()); // J = radical
    CHECK(spans_match(pc.j11, {unit_vec(3, 1), unit_vec(3, 2)}, 3));
    CHECK(pc.j00.empty());
    CHECK(pc.j10.empty());
    CHECK(pc.j01.empty());

    RationalVector not_idem = unit_vec(3, 1);
    CHECK_THROWS_AS(peirce_decompose(c3s, not_idem), InvalidArgument);
}

TEST_CASE("peirce parts multiply by the Kronecker rule") {
    FiniteAbelianGroup triv({1});
    GStarAlgebra m =
        catalog::reflection_family(triv, 2, catalog::ReflectionFamily::m, false);
    RationalVector e = unit_vec(4, 0);
    PeirceDecomposition pd = peirce_decompose(m, e, radical(m));
    auto part = [&](const std::vector<RationalVector>& vs) {
        RankTracker t(m.dim());
        for (const auto& v : vs) t.add_row(v);
        return t;
    };
    RankTracker t00 = part(pd.j00), t10 = part(pd.j10), t01 = part(pd.j01), t11 = part(pd.j11);
    // J10 * J01 <= J11, J10 * J10 = 0 etc., on the spanning vectors
    for (const auto& x : pd.j10)
        for (const auto& y : pd.j01) CHECK(t11.in_span(m.multiply(x, y)));
    for (const auto& x : pd.j10)
        for (const auto& y : pd.j10) {
            auto prod = m.multiply(x, y);
            for (const auto& q : prod) CHECK(is_zero(q));
        }
}

TEST_CASE("component membership checks") {
    GStarAlgebra a = g2_tau_gg();
    CHECK(in_component(a, unit_vec(4, 1), {1}, -1));
    CHECK_FALSE(in_component(a, unit_vec(4, 1), {1}, +1));
    CHECK_FALSE(in_component(a, unit_vec(4, 1), {2}, -1));
    RationalVector mixed(4);
    mixed[1] = 1;
    mixed[3] = 1; // e1 + e1e2 is not homogeneous
    CHECK_FALSE(in_component(a, mixed, {1}, -1));
}

TEST_CASE("algebra json round trip") {
    GStarAlgebra a = g2_tau_gg();
    std::string text = algebra_to_json_text(a);
    GStarAlgebra back = algebra_from_json_text(text);
    CHECK(validate(back).ok);
    CHECK(back.dim() == a.dim());
    CHECK(back.grading() == a.grading());
    CHECK(back.involution() == a.involution());
    CHECK(algebra_to_json_text(back) == text);
}

TEST_CASE("algebra json rejects malformed input") {
    CHECK_THROWS_AS(algebra_from_json_text("{"), ParseError);
    CHECK_THROWS_AS(algebra_from_json_text(R"({"group":[2],"dim":1,"grading":[[0]],
        "involution":[["1/0"]]})"),
                    ParseError);
    CHECK_THROWS_AS(algebra_from_json_text(R"({"group":[2],"dim":1,"grading":[[0],[0]],
        "involution":[["1"]]})"),
                    ParseError);
}

TEST_CASE("zero-dimensional algebra degenerates gracefully") {
    GStarAlgebra zero("zero", FiniteAbelianGroup({2}), 0);
    CHECK(validate(zero).ok);
    CHECK(radical(zero).empty());
    CHECK(support(zero).empty());
    CHECK(component_basis(zero, {0}, 1).empty());
}
