#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gstar/matrix.hpp"

#include <random>

using namespace gstar;

namespace {

RationalMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<RationalVector> r;
    for (const auto& row : rows) {
        RationalVector v;
        for (long x : row) v.push_back(Rational(x));
        r.push_back(v);
    }
    return RationalMatrix::from_rows(r);
}

// Independent rank oracle: clear denominators row by row, then run integer
// fraction-free (Bareiss) elimination on mpz values only.
int bareiss_rank(const RationalMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int r = 0; r < rows; ++r) {
        BigInt lcm = 1;
        for (int c = 0; c < cols; ++c) {
            BigInt den = m.at(r, c).get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (int c = 0; c < cols; ++c) {
            Rational scaled = m.at(r, c) * Rational(lcm);
            a[r][c] = scaled.get_num();
        }
    }
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(RationalMatrix(2, 5)) == 0);
    CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rref with pivots") {
    auto [r1, p1] = rref_with_pivots(RationalMatrix::identity(4));
    CHECK(r1 == RationalMatrix::identity(4));
    CHECK(p1 == std::vector<int>{0, 1, 2, 3});

    auto [r2, p2] = rref_with_pivots(RationalMatrix(3, 2));
    CHECK(p2.empty());
    CHECK(r2 == RationalMatrix(3, 2));

    auto [r3, p3] = rref_with_pivots(from_ints({{0, 1}, {1, 0}}));
    CHECK(r3 == RationalMatrix::identity(2));
    CHECK(p3 == std::vector<int>{0, 1});
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(RationalMatrix::identity(3)).empty());

    auto k1 = kernel_basis(from_ints({{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0][0] * Rational(-1) == k1[0][1]); // proportional to (1,-1)

    auto m = from_ints({{1, 2}, {2, 4}});
    auto k2 = kernel_basis(m);
    REQUIRE(k2.size() == 1);
    // oracle: check M v = 0 exactly
    for (int r = 0; r < m.rows(); ++r) {
        Rational dot = 0;
        for (int c = 0; c < m.cols(); ++c) dot += m.at(r, c) * k2[0][c];
        CHECK(is_zero(dot));
    }
}

TEST_CASE("solve_in_span") {
    auto basis = from_ints({{1, 0, 0}, {0, 1, 0}});
    auto c = solve_in_span(basis, {Rational(1), Rational(1), Rational(0)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 1);

    CHECK_FALSE(solve_in_span(from_ints({{1, 0}}), {Rational(0), Rational(1)}).has_value());

    auto sym = solve_in_span(from_ints({{1, 1}, {1, -1}}), {Rational(2), Rational(0)});
    REQUIRE(sym.has_value());
    CHECK((*sym)[0] == 1);
    CHECK((*sym)[1] == 1);
}

TEST_CASE("span solver agrees with one-shot solves") {
    std::vector<RationalVector> rows = {{Rational(1), Rational(2), Rational(3)},
                                        {Rational(0), Rational(1), Rational(1)}};
    SpanSolver solver(rows);
    RationalVector target = {Rational(2), Rational(5), Rational(7)};
    auto c = solver.solve(target);
    REQUIRE(c.has_value());
    for (int i = 0; i < 3; ++i)
        CHECK((*c)[0] * rows[0][i] + (*c)[1] * rows[1][i] == target[i]);
    CHECK_FALSE(solver.solve({Rational(1), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("properties on random matrices against the integer oracle") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 6), num(-4, 4), den(1, 3);
    for (int it = 0; it < 60; ++it) {
        int r = dim(rng), c = dim(rng);
        RationalMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = Rational(num(rng), den(rng));

        int rk = rank(m);
        CHECK(rk == bareiss_rank(m));          // independent integer path
        CHECK(rk == rank(m.transposed()));     // rank(M) = rank(M^T)
        auto kb = kernel_basis(m);
        CHECK(static_cast<int>(kb.size()) == c - rk);
        for (const auto& v : kb)
            for (int i = 0; i < r; ++i) {
                Rational dot = 0;
                for (int j = 0; j < c; ++j) dot += m.at(i, j) * v[j];
                CHECK(is_zero(dot));
            }
    }
}

TEST_CASE("rank tracker matches batch rank") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int it = 0; it < 20; ++it) {
        RationalMatrix m(5, 4);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = Rational(num(rng));
        RankTracker t(4);
        for (int i = 0; i < 5; ++i) t.add_row(m.row(i));
        CHECK(t.rank() == rank(m));
        CHECK(t.in_span(m.row(0)));
    }
}

TEST_CASE("rational text forms") {
    CHECK(rational_str(parse_rational("-3/6").value()) == "-1/2"); // canonicalized on parse
    CHECK(rational_str(parse_rational("4/2").value()) == "2");
    CHECK(rational_str(Rational(1) / Rational(-2)) == "-1/2"); // arithmetic stays canonical
    CHECK(parse_rational("7/3").value() == Rational(7, 3));
    CHECK(parse_rational("-2").value() == Rational(-2));
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("a/2").has_value());
    CHECK_FALSE(parse_rational("").has_value());
}
