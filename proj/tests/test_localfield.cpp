#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gspin/conic_oracle.hpp"
#include "gspin/covertorus.hpp"
#include "gspin/localfield.hpp"

using namespace gspin;

namespace {
FieldElement minus_one(const LocalField& F) {
    if (F.is_real()) return FieldElement(0, 1);
    return FieldElement(0, F.p() % 4 == 3 ? 1 : 0);
}
}  // namespace

TEST_CASE("field configuration validation") {
    CHECK_THROWS_AS(LocalField::padic(2), std::invalid_argument);
    CHECK_THROWS_AS(LocalField::padic(9), std::invalid_argument);
    CHECK_THROWS_AS(LocalField::padic(5, 4), std::invalid_argument);  // 4 is a residue
    LocalField F = LocalField::padic(7);
    CHECK(F.nonresidue() == 3);
    CHECK(legendre_symbol(F.nonresidue(), 7) == -1);
    CHECK(LocalField::padic(3).square_class_reps().size() == 4);
    CHECK(LocalField::real().square_class_reps().size() == 2);
}

TEST_CASE("hilbert symbol agrees with the conic solvability oracle") {
    for (long long p : {3LL, 5LL, 7LL}) {
        LocalField F = LocalField::padic(p);
        for (const FieldElement& x : F.square_class_reps())
            for (const FieldElement& y : F.square_class_reps())
                CHECK(F.hilbert(x, y) == hilbert_by_conic_oracle(F, x, y));
    }
    LocalField R = LocalField::real();
    for (const FieldElement& x : R.square_class_reps())
        for (const FieldElement& y : R.square_class_reps())
            CHECK(R.hilbert(x, y) == hilbert_by_conic_oracle(R, x, y));
}

TEST_CASE("hilbert symbol: pinned values") {
    LocalField F3 = LocalField::padic(3);
    // (3,3)_3 = -1: no primitive solution of 3x^2 + 3y^2 = z^2 over Z/81
    CHECK(F3.hilbert(FieldElement(1, 0), FieldElement(1, 0)) == -1);
    CHECK(hilbert_by_conic_oracle(F3, FieldElement(1, 0), FieldElement(1, 0)) == -1);
    // squares lie in the kernel
    for (const FieldElement& x : enumerate_field_elements(F3, {-1, 0, 1, 2}))
        for (const FieldElement& y : F3.square_class_reps()) CHECK(F3.hilbert(x.square(), y) == 1);
    LocalField R = LocalField::real();
    CHECK(R.hilbert(FieldElement(0, 1), FieldElement(0, 1)) == -1);
}

TEST_CASE("hilbert symbol: bilinearity, symmetry, c(x,-x)=1") {
    for (long long p : {3LL, 5LL, 7LL}) {
        LocalField F = LocalField::padic(p);
        std::vector<FieldElement> xs = enumerate_field_elements(F, {-1, 0, 1});
        for (auto& x : xs)
            for (auto& y : xs) {
                CHECK(F.hilbert(x, y) == F.hilbert(y, x));
                CHECK(F.hilbert(x, minus_one(F) * x) == 1);
                for (auto& z : xs) CHECK(F.hilbert(x * y, z) == F.hilbert(x, z) * F.hilbert(y, z));
            }
        // trivial on unit pairs for odd residue characteristic
        for (auto& x : enumerate_field_elements(F, {0}))
            for (auto& y : enumerate_field_elements(F, {0})) CHECK(F.hilbert(x, y) == 1);
    }
}

TEST_CASE("weil factor: admissible kappa and relations") {
    for (long long p : {3LL, 5LL, 7LL}) {
        LocalField F = LocalField::padic(p);
        int pipi = F.hilbert(FieldElement(1, 0), FieldElement(1, 0));
        for (int k = 0; k < 4; ++k) {
            bool admissible = (2 * k) % 4 == (pipi == 1 ? 0 : 2);
            if (admissible) CHECK_NOTHROW(WeilFactor(F, k));
            else CHECK_THROWS_AS(WeilFactor(F, k), std::invalid_argument);
        }
        for (int k : valid_kappa_exponents(F)) {
            WeilFactor g(F, k);
            std::vector<FieldElement> xs = enumerate_field_elements(F, {-2, -1, 0, 1, 2});
            for (auto& x : xs) {
                CHECK(g(x.square()).is_one());
                CHECK(g(x.inverse()) == g(x));
                for (auto& y : xs)
                    CHECK(g(x * y) == g(x) * g(y) * CharacterValue::from_sign(F.hilbert(x, y)));
            }
            // units are in the kernel (unramified configuration)
            CHECK(g(FieldElement(0, 1)).is_one());
        }
    }
    LocalField F3 = LocalField::padic(3);
    // gamma(3*3) = gamma(3)^2 (3,3)_3 = kappa^2 * (-1) = 1
    WeilFactor g(F3, 1);  // kappa = i
    CHECK(g(FieldElement(1, 0)) == CharacterValue::zeta(1));
    CHECK((g(FieldElement(1, 0)) * g(FieldElement(1, 0)) *
           CharacterValue::from_sign(F3.hilbert(FieldElement(1, 0), FieldElement(1, 0))))
              .is_one());
    CHECK(g(FieldElement(2, 0)).is_one());
}

TEST_CASE("abs_value") {
    CHECK(abs_value(FieldElement(0, 1)).is_one());
    CHECK(abs_value(FieldElement(1, 0)) == CharacterValue::q_power(Rational(-1)));
    CHECK(abs_value(FieldElement(-2, 0)) == CharacterValue::q_power(Rational(2)));
    // homomorphism
    FieldElement x(3, 1), y(-1, 1);
    CHECK(abs_value(x * y) == abs_value(x) * abs_value(y));
}

TEST_CASE("square class characters") {
    SquareClassCharacter triv = SquareClassCharacter::trivial();
    for (auto v : {-2LL, 0LL, 5LL})
        for (int c : {0, 1}) CHECK(triv(FieldElement(v, c)).is_one());

    SquareClassCharacter eta = SquareClassCharacter::unramified();
    CHECK(eta(FieldElement(3, 0)) == CharacterValue::z_power(3));
    CHECK(eta(FieldElement(0, 1)).is_one());

    SquareClassCharacter eta2 = SquareClassCharacter::with_unit_sign(-1);
    CHECK(eta2(FieldElement(1, 1)) == CharacterValue::z_power(1) * CharacterValue::from_sign(-1));
    CHECK_THROWS_AS(SquareClassCharacter::with_unit_sign(2), std::invalid_argument);

    // multiplicativity across the square-class structure
    LocalField F = LocalField::padic(5);
    for (auto& x : enumerate_field_elements(F, {-1, 0, 1, 2}))
        for (auto& y : enumerate_field_elements(F, {-1, 0, 1, 2}))
            CHECK(eta2(x * y) == eta2(x) * eta2(y));
}

TEST_CASE("character values form a group") {
    CharacterValue a(Rational(3, 2), 1, -2);
    CharacterValue b(Rational(-1, 2), 3, 2);
    CHECK((a * b) == CharacterValue(Rational(1), 0, 0));
    CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(4) == CharacterValue(Rational(6), 0, -8));
    CHECK(a.pow(-1) == a.inverse());
    CHECK(CharacterValue::from_sign(-1).pow(2).is_one());
}

TEST_CASE("real field restrictions") {
    LocalField R = LocalField::real();
    CHECK_THROWS_AS(R.element(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(WeilFactor(R, 1), std::invalid_argument);
    CHECK(R.class_of_rational(Rational(-7, 2)) == FieldElement(0, 1));
}

TEST_CASE("class_of_rational") {
    LocalField F = LocalField::padic(3);
    CHECK(F.class_of_rational(Rational(2)) == FieldElement(0, 1));      // 2 is a non-residue mod 3
    CHECK(F.class_of_rational(Rational(4)) == FieldElement(0, 0));
    CHECK(F.class_of_rational(Rational(1, 3)) == FieldElement(-1, 0));
    CHECK(F.class_of_rational(Rational(6)) == FieldElement(1, 1));
    CHECK_THROWS_AS(F.class_of_rational(Rational(0)), std::invalid_argument);
}
