#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deform/graded.hpp"

using namespace deform;

TEST_CASE("shift convention: k[n] lands in degree -n") {
    GradedVectorSpace k0({{"v", 0}});
    CHECK(shift(k0, 2).dim(-2) == 1);
    CHECK(shift(k0, 2).total_dim() == 1);
    CHECK(shift(k0, 0) == k0);

    GradedVectorSpace k3({{"v", 3}});
    CHECK(shift(k3, -1).dim(4) == 1);
}

TEST_CASE("shift is additive") {
    GradedVectorSpace v({{"a", 0}, {"b", 2}, {"c", -1}});
    CHECK(shift(shift(v, 3), -5) == shift(v, -2));
}

TEST_CASE("dual flips degrees") {
    GradedVectorSpace k2({{"v", 2}});
    CHECK(dual(k2).dim(-2) == 1);

    GradedVectorSpace k0({{"a", 0}, {"b", 0}});
    CHECK(dual(k0).dim(0) == 2);

    GradedVectorSpace mixed({{"p", 1}, {"q", -1}});
    GradedVectorSpace d = dual(mixed);
    CHECK(d.dim(-1) == 1);
    CHECK(d.dim(1) == 1);

    // double dual has the same dimensions per degree
    for (int n : mixed.degrees()) CHECK(dual(dual(mixed)).dim(n) == mixed.dim(n));
}

TEST_CASE("tensor degrees and basis order") {
    GradedVectorSpace a({{"v", 1}});
    CHECK(tensor(a, a).dim(2) == 1);

    GradedVectorSpace v({{"p", 0}, {"q", 2}});
    GradedVectorSpace unit({{"1", 0}});
    GradedVectorSpace t = tensor(v, unit);
    for (int n : v.degrees()) CHECK(t.dim(n) == v.dim(n));
    CHECK(t.labels(0) == std::vector<std::string>{"p*1"});

    GradedVectorSpace w({{"a", 0}, {"b", 0}});
    CHECK(tensor(w, w).dim(0) == 4);
    CHECK(tensor(w, w).labels(0) ==
          std::vector<std::string>{"a*a", "a*b", "b*a", "b*b"});
}

TEST_CASE("koszul swap signs") {
    GradedVectorSpace v({{"v", 1}});
    GradedVectorSpace w({{"w", 1}});
    GradedMap s = koszul_swap(v, w);
    CHECK(s.block(2) == Matrix{{-1}});

    GradedVectorSpace v0({{"v", 0}});
    CHECK(koszul_swap(v0, w).block(1) == Matrix{{1}});

    GradedVectorSpace v2({{"v", 2}});
    GradedVectorSpace w3({{"w", 3}});
    CHECK(koszul_swap(v2, w3).block(5) == Matrix{{1}});
}

TEST_CASE("koszul swap composed with its reverse is the identity") {
    GradedVectorSpace v({{"a", 1}, {"b", 2}});
    GradedVectorSpace w({{"c", 1}, {"d", 3}});
    GradedMap vw = koszul_swap(v, w);
    GradedMap wv = koszul_swap(w, v);
    GradedMap round = wv.compose(vw);
    CHECK(round == GradedMap::identity(tensor(v, w)));
}

TEST_CASE("graded map composition and application") {
    GradedVectorSpace v({{"x", 0}, {"y", 1}});
    GradedMap d(v, v, 1);
    d.set_block(0, Matrix{{1}});
    GradedElement e = GradedElement::basis(v, v.find("x"));
    GradedElement de = d.apply(e);
    CHECK(de.comps.count(1) == 1);
    CHECK(de.comps.at(1) == Vec{Rational(1)});
    CHECK(d.compose(d).block(0).is_zero());
}

TEST_CASE("labels must be unique") {
    GradedVectorSpace v;
    v.add_basis("x", 0);
    CHECK_THROWS_AS(v.add_basis("x", 1), std::invalid_argument);
}
