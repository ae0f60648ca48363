#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobalg/parse.hpp"
#include "helpers.hpp"

using namespace frobalg;
using namespace frobalg::testing;

namespace {

// 0 -> zero, 1 -> q-1, 2 -> q
SymbolicMonomial sm(std::vector<int> pattern) {
    std::vector<SymExp> e;
    for (int v : pattern) e.push_back(static_cast<SymExp>(v));
    return SymbolicMonomial(std::move(e));
}

SymbolicIdeal sideal(int n, std::vector<SymbolicMonomial> gens) {
    return make_ideal(n, std::move(gens));
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("divisibility in both kinds") {
    CHECK(divides(mono({1, 0}), mono({1, 1})));
    CHECK_FALSE(divides(sm({2, 0}), sm({1, 1})));  // q > q-1 in the first slot
    CHECK(divides(sm({1, 1}), sm({2, 1})));
    CHECK_THROWS_AS(divides(mono({1}), mono({1, 0})), PreconditionError);
}

TEST_CASE("intersection") {
    CHECK(intersect(parse_ideal("x1", 2), parse_ideal("x2", 2)) ==
          parse_ideal("x1*x2", 2));

    // (x1^{q-1}) cap (x2^q, x3^q, (x2 x3)^{q-1}): pairwise lcms stay minimal
    SymbolicIdeal a = sideal(3, {sm({1, 0, 0})});
    SymbolicIdeal b = sideal(3, {sm({0, 2, 0}), sm({0, 0, 2}), sm({0, 1, 1})});
    SymbolicIdeal expected =
        sideal(3, {sm({1, 2, 0}), sm({1, 0, 2}), sm({1, 1, 1})});
    CHECK(ideal_equal(intersect(a, b), expected));

    MonomialIdeal I = parse_ideal("x1*x2, x2*x3", 3);
    CHECK(ideal_equal(intersect(I, MonomialIdeal::unit(3)), I));
    CHECK(intersect(I, MonomialIdeal::zero(3)).is_zero());
}

TEST_CASE("sum") {
    SymbolicIdeal fp = sideal(2, {sm({2, 0}), sm({0, 2})});
    SymbolicIdeal principal = sideal(2, {sm({1, 1})});
    CHECK(ideal_equal(sum(fp, principal),
                      sideal(2, {sm({2, 0}), sm({0, 2}), sm({1, 1})})));

    MonomialIdeal I = parse_ideal("x1^2, x2", 2);
    CHECK(ideal_equal(sum(I, MonomialIdeal::zero(2)), I));

    // height one: (x^q) + (x^{q-1}) collapses to (x^{q-1})
    CHECK(ideal_equal(sum(sideal(1, {sm({2})}), sideal(1, {sm({1})})),
                      sideal(1, {sm({1})})));
}

TEST_CASE("product") {
    CHECK(product(parse_ideal("x1", 2), parse_ideal("x2", 2)) ==
          parse_ideal("x1*x2", 2));

    // K_1 * K_1^[2] for Katzman's ideal at p = 2; products minimalized by hand
    MonomialIdeal k1 = parse_ideal("x1*x2^2, x1*x3^2, x1*x2*x3", 3);
    MonomialIdeal k1f2 = parse_ideal("x1^2*x2^4, x1^2*x3^4, x1^2*x2^2*x3^2", 3);
    MonomialIdeal expected = parse_ideal(
        "x1^3*x2^6, x1^3*x3^6, x1^3*x2^5*x3, x1^3*x2*x3^5, x1^3*x2^4*x3^2, "
        "x1^3*x2^2*x3^4, x1^3*x2^3*x3^3",
        3);
    CHECK(ideal_equal(product(k1, k1f2), expected));

    MonomialIdeal I = parse_ideal("x1*x2, x1*x3", 3);
    CHECK(ideal_equal(product(I, MonomialIdeal::unit(3)), I));
}

TEST_CASE("colon") {
    // K_1 for Katzman's ideal at q = 2, via (J : f) = (1/f)(J cap (f))
    MonomialIdeal J = parse_ideal("x1^2*x2^2, x1^2*x3^2", 3);
    MonomialIdeal I = parse_ideal("x1*x2, x1*x3", 3);
    CHECK(ideal_equal(colon(J, I), parse_ideal("x1*x2^2, x1*x3^2, x1*x2*x3", 3)));

    CHECK(ideal_equal(colon(J, MonomialIdeal::unit(3)), J));

    CHECK(ideal_equal(colon(parse_ideal("x1^2, x2^2", 3), parse_ideal("x3", 3)),
                      parse_ideal("x1^2, x2^2", 3)));

    CHECK_THROWS_AS(colon(J, MonomialIdeal::zero(3)), PreconditionError);
}

TEST_CASE("frobenius power") {
    CHECK(ideal_equal(frobenius_power(parse_ideal("x1*x2, x1*x3", 3), 2),
                      parse_ideal("x1^2*x2^2, x1^2*x3^2", 3)));

    CHECK(ideal_equal(frobenius_power_symbolic(parse_ideal("x1, x2", 2)),
                      sideal(2, {sm({2, 0}), sm({0, 2})})));

    MonomialIdeal I = parse_ideal("x1^3*x2, x2^2", 2);
    CHECK(ideal_equal(frobenius_power(I, 1), I));
    CHECK_THROWS_AS(frobenius_power_symbolic(I), PreconditionError);
}

TEST_CASE("membership") {
    CHECK(contains(sideal(2, {sm({1, 1})}), sm({2, 1})));
    CHECK_FALSE(contains(sideal(1, {sm({2})}), sm({1})));
    CHECK_FALSE(contains(parse_ideal("x1^2*x2^2", 3), mono({3, 1, 1})));
    CHECK(contains(MonomialIdeal::unit(2), mono({0, 0})));
    CHECK_FALSE(contains(MonomialIdeal::zero(2), mono({0, 0})));
}

TEST_CASE("ideal equality by canonical generators") {
    MonomialIdeal lhs = intersect(parse_ideal("x1, x2", 3), parse_ideal("x1, x3", 3));
    CHECK(ideal_equal(lhs, parse_ideal("x1, x2*x3", 3)));
    CHECK_FALSE(ideal_equal(parse_ideal("x1", 1), parse_ideal("x1^2", 1)));
}

TEST_CASE("instantiation") {
    CHECK(ideal_equal(instantiate(sideal(2, {sm({1, 2})}), 2),
                      parse_ideal("x1*x2^2", 2)));
    CHECK(ideal_equal(instantiate(sideal(2, {sm({1, 1})}), 3),
                      parse_ideal("x1^2*x2^2", 2)));
    CHECK_THROWS_AS(instantiate(sideal(1, {sm({1})}), 1), PreconditionError);
}

TEST_CASE("ideal grammar") {
    MonomialIdeal I = parse_ideal("x1*x2, x1*x3");
    CHECK(I.n == 3);
    CHECK(to_string(I) == "x1*x2, x1*x3");

    CHECK(parse_ideal(" x1 * x2 , x3 ^ 2 ") == parse_ideal("x1*x2, x3^2"));
    CHECK(parse_ideal("x12").n == 12);
    CHECK(parse_ideal("x1*x1", 1) == parse_ideal("x1^2", 1));
    CHECK(parse_ideal("x1^0", 2).is_unit());
    CHECK(parse_ideal("x2", 4).n == 4);

    CHECK_THROWS_AS(parse_ideal(""), ParseError);
    CHECK_THROWS_AS(parse_ideal("x0"), ParseError);
    CHECK_THROWS_AS(parse_ideal("y1"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1^"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1,,x2"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1*"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1 x2"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x5", 3), ParseError);

    CHECK(to_string(symbolic_from_squarefree(parse_ideal("x1*x3", 3).gens[0])) ==
          "x1^q*x3^q");
    CHECK(to_string(SymbolicMonomial::qm1_on(3, 0b101)) == "x1^(q-1)*x3^(q-1)");
    CHECK(to_string(Monomial::one(2)) == "1");
    CHECK(to_string(MonomialIdeal::zero(2)) == "0");

    // printing round-trips through the grammar for every printable ideal
    for (int iter = 0; iter < 100; ++iter) {
        int n = rand_int(1, 6);
        MonomialIdeal I = random_ideal(n, 4, 5);
        if (I.is_zero() || I.is_unit()) continue;
        CHECK(parse_ideal(to_string(I), n) == I);
    }
}

TEST_CASE("minimality survives every operation") {
    auto check_minimal = [](const auto& ideal) {
        for (std::size_t i = 0; i < ideal.gens.size(); ++i)
            for (std::size_t j = 0; j < ideal.gens.size(); ++j)
                if (i != j) CHECK_FALSE(divides(ideal.gens[j], ideal.gens[i]));
    };
    for (int iter = 0; iter < 200; ++iter) {
        int n = rand_int(1, 5);
        MonomialIdeal a = random_ideal(n, 4, 5);
        MonomialIdeal b = random_ideal(n, 4, 5);
        check_minimal(intersect(a, b));
        check_minimal(sum(a, b));
        check_minimal(product(a, b));
        check_minimal(colon(a, b));
    }
}

TEST_CASE("colon oracle is sound and complete") {
    for (int iter = 0; iter < 60; ++iter) {
        int n = rand_int(1, 6);
        MonomialIdeal J = random_ideal(n, 3, 4);
        MonomialIdeal I = random_ideal(n, 3, 3);
        MonomialIdeal Q = colon(J, I);

        for (const Monomial& g : Q.gens)
            for (const Monomial& f : I.gens) CHECK(contains(J, g * f));

        // every monomial multiplying I into J lies in the colon; minimal
        // generators of (J : I) never exceed the exponent bound of J
        int bound = 0;
        for (const Monomial& g : J.gens) bound = std::max(bound, g.max_norm());
        std::vector<int> e(n, 0);
        while (true) {
            Monomial m(e);
            bool maps_in = true;
            for (const Monomial& f : I.gens)
                if (!contains(J, m * f)) {
                    maps_in = false;
                    break;
                }
            CHECK(maps_in == contains(Q, m));
            int j = 0;
            while (j < n) {
                if (++e[j] <= bound) break;
                e[j] = 0;
                ++j;
            }
            if (j == n) break;
        }
    }
}

TEST_CASE("symbolic operations commute with instantiation") {
    for (int iter = 0; iter < 100; ++iter) {
        int n = rand_int(1, 4);
        SymbolicIdeal A = random_symbolic_ideal(n, 4);
        SymbolicIdeal B = random_symbolic_ideal(n, 4);
        for (int q : {2, 3, 4, 5}) {
            CHECK(ideal_equal(instantiate(intersect(A, B), q),
                              intersect(instantiate(A, q), instantiate(B, q))));
            CHECK(ideal_equal(instantiate(sum(A, B), q),
                              sum(instantiate(A, q), instantiate(B, q))));
        }
    }
    for (int iter = 0; iter < 100; ++iter) {
        int n = rand_int(1, 4);
        MonomialIdeal I = random_squarefree_ideal(n, 4);
        for (int q : {2, 3, 4, 5})
            CHECK(ideal_equal(instantiate(frobenius_power_symbolic(I), q),
                              frobenius_power(I, q)));
    }
}

TEST_CASE("colon laws") {
    for (int iter = 0; iter < 80; ++iter) {
        int n = rand_int(2, 4);
        MonomialIdeal J1 = random_squarefree_ideal(n, 3);
        MonomialIdeal J2 = random_squarefree_ideal(n, 3);
        MonomialIdeal I1 = random_squarefree_ideal(n, 3);
        MonomialIdeal I2 = random_squarefree_ideal(n, 3);

        CHECK(ideal_equal(colon(intersect(J1, J2), I1),
                          intersect(colon(J1, I1), colon(J2, I1))));

        MonomialIdeal lhs = colon(J1, intersect(I1, I2));
        MonomialIdeal rhs = sum(colon(J1, I1), colon(J1, I2));
        CHECK(ideal_contains(lhs, rhs));
    }
}
