#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace bgbc;
using namespace bgbc_test;

namespace {

// Single-term field coeff * x^expo d/dx_dir at rank 2.
PolyVectorField term2(Multi expo, int dir, long coeff = 1) {
    PolyVectorField v(2);
    poly_add(v.comp[std::size_t(dir - 1)], expo, rational(coeff));
    return v;
}

const Multi kOne{0, 0};
const Multi kX1{1, 0};
const Multi kX2{0, 1};

}  // namespace

TEST_CASE("degree -1 special series is all constant fields", "[vect]") {
    auto basis = vect_basis(2, -1, SeriesKind::special);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == term2(kOne, 1));
    CHECK(basis[1] == term2(kOne, 2));
}

TEST_CASE("degree 0 special series at rank 2 is three dimensional", "[vect]") {
    CHECK(vect_basis(2, 0, SeriesKind::special).size() == 3);
}

TEST_CASE("general series dimension count", "[vect]") {
    for (int d : {1, 2, 3})
        for (int n = -1; n <= 3; ++n) {
            long expected = d * mpz_get_si(binomial(d + n, n + 1).get_mpz_t());
            CHECK(static_cast<long>(vect_basis(d, n, SeriesKind::general).size()) == expected);
        }
}

TEST_CASE("special and hamiltonian dimensions at rank 2", "[vect]") {
    // Divergence is onto, so dim = 2(n+2) - (n+1); Hamiltonian fields are
    // parametrized by polynomials of degree n+2.
    for (int n = 0; n <= 3; ++n) {
        CHECK(static_cast<int>(vect_basis(2, n, SeriesKind::special).size()) == n + 3);
        CHECK(static_cast<int>(vect_basis(2, n, SeriesKind::hamiltonian).size()) == n + 3);
    }
}

TEST_CASE("lie bracket examples", "[vect]") {
    PolyVectorField d1 = term2(kOne, 1);
    PolyVectorField d2 = term2(kOne, 2);
    PolyVectorField x1d2 = term2(kX1, 2);
    PolyVectorField x2d1 = term2(kX2, 1);

    CHECK(lie_bracket(d1, x1d2) == d2);
    CHECK(lie_bracket(x1d2, x1d2).is_zero());
    PolyVectorField h = lie_bracket(x1d2, x2d1);  // x1 d1 - x2 d2
    CHECK(h == term2(kX1, 1) + term2(kX2, 2, -1));
}

TEST_CASE("bracket adds degrees", "[vect]") {
    auto v = vect_basis(2, 1, SeriesKind::special);
    auto w = vect_basis(2, 2, SeriesKind::special);
    for (const auto& a : v)
        for (const auto& b : w) {
            PolyVectorField br = lie_bracket(a, b);
            if (!br.is_zero()) CHECK(br.degree() == 3);
        }
}

TEST_CASE("form preservation examples", "[vect]") {
    CHECK(preserves_form(term2(kX1, 2), FormKind::volume));
    CHECK(!preserves_form(term2(kX1, 1), FormKind::volume));
    PolyVectorField h = term2(kX1, 1) + term2(kX2, 2, -1);
    CHECK(preserves_form(h, FormKind::symplectic));  // Hamiltonian of x1 x2
    CHECK(!preserves_form(term2(kX1, 1), FormKind::symplectic));
}

TEST_CASE("series bases preserve their forms", "[vect]") {
    for (int d : {2, 4}) {
        for (int n = -1; n <= 2; ++n) {
            for (const auto& v : vect_basis(d, n, SeriesKind::special))
                CHECK(preserves_form(v, FormKind::volume));
            for (const auto& v : vect_basis(d, n, SeriesKind::hamiltonian))
                CHECK(preserves_form(v, FormKind::symplectic));
        }
        // A known non-member in each degree <= 2: x_1^{n+1} d/dx_1.
        for (int n = 0; n <= 2; ++n) {
            PolyVectorField bad(d);
            Multi m(std::size_t(d), 0);
            m[0] = n + 1;
            poly_add(bad.comp[0], m, rational(1));
            CHECK(!preserves_form(bad, FormKind::volume));
            CHECK(!preserves_form(bad, FormKind::symplectic));
        }
    }
}

TEST_CASE("hamiltonian series requires even rank", "[vect]") {
    CHECK_THROWS_AS(vect_basis(3, 0, SeriesKind::hamiltonian), std::domain_error);
    CHECK_THROWS_AS(preserves_form(PolyVectorField(3), FormKind::symplectic),
                    std::domain_error);
}

TEST_CASE("linear fields convert to matrices and back", "[vect]") {
    for (const auto& v : vect_basis(2, 0, SeriesKind::special)) {
        Mat m = matrix_of_linear_field(v);
        CHECK(linear_field_of_matrix(m) == v);
        CHECK(sgn(m.trace()) == 0);  // sl_2
    }
    for (const auto& v : vect_basis(2, 0, SeriesKind::hamiltonian))
        CHECK(preserves_form(v, FormKind::symplectic));
}

TEST_CASE("brackets of form-preserving fields preserve the form", "[vect]") {
    for (int n = 0; n <= 1; ++n)
        for (int m = 0; m <= 1; ++m) {
            for (const auto& a : vect_basis(2, n, SeriesKind::special))
                for (const auto& b : vect_basis(2, m, SeriesKind::special))
                    CHECK(preserves_form(lie_bracket(a, b), FormKind::volume));
            for (const auto& a : vect_basis(2, n, SeriesKind::hamiltonian))
                for (const auto& b : vect_basis(2, m, SeriesKind::hamiltonian))
                    CHECK(preserves_form(lie_bracket(a, b), FormKind::symplectic));
        }
}
