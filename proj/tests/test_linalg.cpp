#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "deform/linalg.hpp"

using namespace deform;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational::parse("-7/3").str() == "-7/3");
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK((Rational(3, 4) * Rational(4, 3)).is_one());
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rref on the hand-reduced 2x2 example") {
    Matrix m{{1, 2}, {2, 4}};
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
}

TEST_CASE("rref of identity and zero") {
    RrefResult id = rref(Matrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(id.reduced == Matrix::identity(3));

    RrefResult z = rref(Matrix(2, 2));
    CHECK(z.rank == 0);
    CHECK(z.pivots.empty());
    CHECK(z.reduced == Matrix(2, 2));
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
        Matrix r = rref(m).reduced;
        CHECK(rref(r).reduced == r);
    }
}

TEST_CASE("kernel examples") {
    Matrix m{{1, 2}, {2, 4}};
    Subspace k = kernel_basis(m);
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(2, {Vec{Rational(-2), Rational(1)}}));

    CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
    CHECK(kernel_basis(Matrix(3, 3)) == Subspace::full(3));
}

TEST_CASE("image examples") {
    CHECK(image_basis(Matrix{{1}, {2}}) ==
          Subspace::span(2, {Vec{Rational(1), Rational(2)}}));
    CHECK(image_basis(Matrix(3, 2)).dim() == 0);
    CHECK(image_basis(Matrix{{1, 1}, {0, 0}}) ==
          Subspace::span(2, {Vec{Rational(1), Rational(0)}}));
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 80; ++it) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        Matrix m = random_matrix(rng, rows, cols);
        CHECK(kernel_basis(m).dim() + rref(m).rank == cols);
        CHECK(image_basis(m).dim() == rref(m).rank);
    }
}

TEST_CASE("solve examples") {
    Vec b{Rational(3), Rational(-1)};
    CHECK(*solve(Matrix::identity(2), b) == b);

    Matrix m{{1, 2}, {2, 4}};
    auto x = solve(m, Vec{Rational(1), Rational(2)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{Rational(1), Rational(0)});

    CHECK_FALSE(solve(m, Vec{Rational(1), Rational(0)}).has_value());
}

TEST_CASE("solve soundness on random systems") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 80; ++it) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Matrix m = random_matrix(rng, rows, cols);
        Vec b(rows);
        for (std::size_t i = 0; i < rows; ++i) b[i] = Rational(static_cast<long>(rng() % 5) - 2);
        auto x = solve(m, b);
        if (x) CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("complement examples") {
    Subspace u = Subspace::span(2, {Vec{Rational(1), Rational(0)}});
    Subspace w = complement(u, Subspace::full(2));
    CHECK(w == Subspace::span(2, {Vec{Rational(0), Rational(1)}}));

    Subspace v = Subspace::span(3, {Vec{Rational(1), Rational(0), Rational(1)},
                                    Vec{Rational(0), Rational(1), Rational(1)}});
    CHECK(complement(v, v).dim() == 0);
    CHECK(complement(Subspace(3), v) == v);
}

TEST_CASE("complement rejects non-subspaces") {
    Subspace u = Subspace::span(2, {Vec{Rational(1), Rational(1)}});
    Subspace v = Subspace::span(2, {Vec{Rational(1), Rational(0)}});
    CHECK_THROWS_AS(complement(u, v), NotASubspace);
}

TEST_CASE("complement gives a direct sum on random data") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 1 + rng() % 6;
        Matrix vm = random_matrix(rng, rng() % 4, n);
        std::vector<Vec> vrows;
        for (std::size_t i = 0; i < vm.rows(); ++i) vrows.push_back(vm.row(i));
        Subspace v = Subspace::span(n, vrows);
        // random subspace of v
        std::vector<Vec> urows;
        for (const Vec& r : vrows)
            if (rng() % 2) urows.push_back(r);
        Subspace u = Subspace::span(n, urows);
        Subspace w = complement(u, v);
        CHECK(u.dim() + w.dim() == v.dim());
        std::vector<Vec> all = u.basis();
        for (const Vec& b : w.basis()) all.push_back(b);
        if (!all.empty()) CHECK(rref(Matrix::from_rows(all)).rank == v.dim());
    }
}

TEST_CASE("subspace membership and coordinates") {
    Subspace s = Subspace::span(3, {Vec{Rational(1), Rational(2), Rational(0)},
                                    Vec{Rational(0), Rational(0), Rational(1)}});
    CHECK(s.contains(Vec{Rational(2), Rational(4), Rational(-3)}));
    CHECK_FALSE(s.contains(Vec{Rational(0), Rational(1), Rational(0)}));
    auto c = s.coordinates(Vec{Rational(2), Rational(4), Rational(-3)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rational(2));
    CHECK((*c)[1] == Rational(-3));
}
