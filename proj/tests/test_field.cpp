#include <doctest.h>

#include "pgdual/field.hpp"

#include "oracle.hpp"

using pgdual::FieldElement;
using pgdual::FieldOp;
using pgdual::ff_arith;

TEST_CASE("worked residue examples") {
    // 2 + 2 = 4 ≡ 1 (mod 3)
    CHECK(ff_arith(FieldOp::add, FieldElement(2, 3), FieldElement(2, 3)).value() == 1);
    // inverse of 1 is 1 in any field
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        CHECK(ff_arith(FieldOp::inv, FieldElement(1, q)).value() == 1);
    }
    // inverse of 2 mod 5: exhaustive oracle says 3
    CHECK(oracle::gf_inverse(2, 5) == 3);
    CHECK(ff_arith(FieldOp::inv, FieldElement(2, 5)).value() == 3);
}

TEST_CASE("field laws hold exhaustively for q <= 7") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        for (std::uint32_t a = 0; a < q; ++a) {
            FieldElement fa(a, q);
            if (a != 0) {
                CHECK((fa * fa.inverse()).value() == 1);
                CHECK(fa.inverse().value() ==
                      static_cast<std::uint32_t>(oracle::gf_inverse(static_cast<int>(a),
                                                                    static_cast<int>(q))));
            }
            CHECK((fa + (-fa)).value() == 0);
            for (std::uint32_t b = 0; b < q; ++b) {
                FieldElement fb(b, q);
                CHECK((fa + fb) == (fb + fa));
                CHECK((fa * fb) == (fb * fa));
                for (std::uint32_t c = 0; c < q; ++c) {
                    FieldElement fc(c, q);
                    CHECK(((fa + fb) + fc) == (fa + (fb + fc)));
                    CHECK(((fa * fb) * fc) == (fa * (fb * fc)));
                    CHECK((fa * (fb + fc)) == (fa * fb + fa * fc));
                }
            }
        }
    }
}

TEST_CASE("construction rejects bad moduli and residues") {
    CHECK_THROWS_AS(FieldElement(0, 4), pgdual::usage_error);
    CHECK_THROWS_AS(FieldElement(0, 9), pgdual::usage_error);
    CHECK_THROWS_AS(FieldElement(0, 1), pgdual::usage_error);
    CHECK_THROWS_AS(FieldElement(3, 3), pgdual::usage_error);
    CHECK(FieldElement::from_int(-1, 5).value() == 4);
    CHECK(FieldElement::from_int(12, 5).value() == 2);
}

TEST_CASE("error taxonomy: zero inverse and mixed moduli") {
    CHECK_THROWS_AS(FieldElement(0, 5).inverse(), pgdual::domain_error);
    CHECK_THROWS_AS(ff_arith(FieldOp::inv, FieldElement(0, 7)), pgdual::domain_error);
    CHECK_THROWS_AS(FieldElement(1, 3) + FieldElement(1, 5), pgdual::usage_error);
    CHECK_THROWS_AS(ff_arith(FieldOp::add, FieldElement(1, 3), std::nullopt), pgdual::usage_error);
    CHECK_THROWS_AS(ff_arith(FieldOp::inv, FieldElement(1, 3), FieldElement(1, 3)),
                    pgdual::usage_error);
}
