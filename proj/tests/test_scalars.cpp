#include "workbench/scalars.hpp"

#include <doctest.h>

using namespace workbench;

TEST_CASE("cyclotomic polynomials") {
    // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1,
    // Phi_12 = x^4 - x^2 + 1.
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
    for (long m : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 30})
        CHECK(static_cast<long>(cyclotomic_polynomial(m).size()) ==
              euler_phi(m) + 1);
}

TEST_CASE("zeta arithmetic") {
    // zeta_m^m = 1 and sum of all powers is 0 (m > 1).
    for (long m : {2, 3, 4, 5, 6, 7, 12}) {
        CHECK(Cyclotomic::zeta_pow(m, m) == Cyclotomic(m, 1));
        Cyclotomic s(m);
        for (long k = 0; k < m; ++k) s = s + Cyclotomic::zeta_pow(m, k);
        CHECK(s.is_zero());
        // zeta^a * zeta^b = zeta^(a+b)
        CHECK(Cyclotomic::zeta_pow(m, 3) * Cyclotomic::zeta_pow(m, m - 1) ==
              Cyclotomic::zeta_pow(m, m + 2));
    }
    // Non-canonical powers reduce: zeta_4^2 = -1.
    CHECK(Cyclotomic::zeta_pow(4, 2) == Cyclotomic(4, -1));
    // zeta_6 = 1 + zeta_6 - 1 is primitive: zeta_6^3 = -1.
    CHECK(Cyclotomic::zeta_pow(6, 3) == Cyclotomic(6, -1));
    CHECK_THROWS_AS(Cyclotomic(4, 1) + Cyclotomic(6, 1), Error);
}

TEST_CASE("cyclotomic field axioms, randomized") {
    // Spot-check distributivity and inverses via (a-b)*(a+b) = a^2 - b^2.
    for (long m : {4, 5, 6}) {
        Cyclotomic a = Cyclotomic::zeta_pow(m, 1) + Cyclotomic(m, Rational(3, 2));
        Cyclotomic b = Cyclotomic::zeta_pow(m, 2) - Cyclotomic(m, 5);
        CHECK((a - b) * (a + b) == a * a - b * b);
        CHECK(a - a == Cyclotomic(m));
    }
}

TEST_CASE("laurent polynomials in v") {
    long m = 4;
    CycloLaurent v = CycloLaurent::half_power(m, 1);
    CycloLaurent vinv = CycloLaurent::half_power(m, -1);
    CHECK(v * vinv == CycloLaurent::one(m));
    // (v + v^-1)^2 = v^2 + 2 + v^-2
    CycloLaurent s = v + vinv;
    CycloLaurent expect = CycloLaurent::half_power(m, 2) +
                          CycloLaurent(m, 2) + CycloLaurent::half_power(m, -2);
    CHECK(s * s == expect);
    CHECK((s - s).is_zero());
    // v -> 1 is a ring morphism on products.
    CycloLaurent t = CycloLaurent(Cyclotomic::zeta_pow(m, 1)) * v + CycloLaurent(m, 7);
    CHECK((s * t).specialize_v_one() ==
          s.specialize_v_one() * t.specialize_v_one());
    CHECK_THROWS_AS(CycloLaurent::one(4) + CycloLaurent::one(6), Error);
}
