#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arrangelab/exterior.hpp"

using namespace arrangelab;

namespace {

ExtPoly random_poly(const VarTablePtr& vt, std::mt19937& rng, int max_terms = 4) {
    ExtPoly p = ExtPoly::zero(vt);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 0; v < vt->size(); ++v)
            if (rng() % 2)
                m = m.unite(Monomial::var(v));
        p += ExtPoly::monomial(vt, m, coeff(rng));
    }
    return p;
}

} // namespace

TEST_CASE("monomial order is degree-lexicographic") {
    Monomial g1 = Monomial::var(0), g2 = Monomial::var(1), g3 = Monomial::var(2);
    CHECK(deglex_less(g1, g2));
    CHECK(deglex_less(g3, g1.unite(g2)));           // degree dominates
    CHECK(deglex_less(g1.unite(g2), g1.unite(g3))); // then the top variable
    CHECK(deglex_less(g1.unite(g3), g2.unite(g3)));
    CHECK(compare_deglex(g2, g2) == 0);
}

TEST_CASE("monomials across the word boundary") {
    Monomial lo = Monomial::var(3), hi = Monomial::var(100);
    CHECK(deglex_less(lo, hi));
    CHECK(hi.unite(lo).degree() == 2);
    CHECK(merge_sign(lo, hi) == 1);
    CHECK(merge_sign(hi, lo) == -1);
    CHECK(hi.unite(lo).contains(hi));
}

TEST_CASE("anticommutativity and squares") {
    auto vt = make_vars({"x", "y"});
    auto x = ExtPoly::variable(vt, 0), y = ExtPoly::variable(vt, 1);
    CHECK(to_string(x * y) == "x^y");
    CHECK(y * x == -(x * y));
    CHECK((x * x).is_zero());
    CHECK(((x + y) * (x + y)).is_zero()); // squares of degree-1 elements vanish
}

TEST_CASE("sign sanity across all variable pairs") {
    auto vt = make_vars({"a", "b", "c", "d", "e"});
    for (int i = 0; i < vt->size(); ++i)
        for (int j = 0; j < vt->size(); ++j) {
            auto vi = ExtPoly::variable(vt, i), vj = ExtPoly::variable(vt, j);
            CHECK((vi * vj + vj * vi).is_zero());
        }
}

TEST_CASE("multiplication is associative and bilinear (randomized)") {
    auto vt = make_vars({"a", "b", "c", "d", "e", "f"});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        ExtPoly f = random_poly(vt, rng), g = random_poly(vt, rng), h = random_poly(vt, rng);
        CHECK((f * g) * h == f * (g * h));
        CHECK((f + g) * h == f * h + g * h);
    }
}

TEST_CASE("var table mismatch is an error") {
    auto vt1 = make_vars({"x"});
    auto vt2 = make_vars({"x"});
    auto a = ExtPoly::variable(vt1, 0), b = ExtPoly::variable(vt2, 0);
    CHECK_THROWS_AS(a * b, VarTableMismatch);
    CHECK_THROWS_AS(a + b, VarTableMismatch);
}

TEST_CASE("text round trip") {
    auto vt = make_vars({"x_1", "y_2", "g_1_2", "g_1_3"});
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        ExtPoly p = random_poly(vt, rng);
        CHECK(parse_ext_poly(vt, to_string(p)) == p);
    }
    ExtPoly q = parse_ext_poly(vt, "3/2*x_1^y_2 - g_1_2^g_1_3");
    CHECK(q.coeff(Monomial::var(0).unite(Monomial::var(1))) == Rational(3, 2));
    CHECK(q.coeff(Monomial::var(2).unite(Monomial::var(3))) == -1);
    CHECK(parse_ext_poly(vt, "y_2^x_1") == -parse_ext_poly(vt, "x_1^y_2"));
    CHECK(parse_ext_poly(vt, "2*1 + x_1 - 1") == ExtPoly::one(vt) + ExtPoly::variable(vt, 0));
    CHECK(to_string(ExtPoly::zero(vt)) == "0");
    CHECK_THROWS_AS(parse_ext_poly(vt, "nope"), ParseError);
    CHECK_THROWS_AS(parse_ext_poly(vt, "x_1 +"), ParseError);
}
