#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcap/families.hpp"
#include "support/test_helpers.hpp"

using namespace qcap;

namespace {

// independent closed forms used as oracles

Matrix depolarizing_closed_form(int d, double x, const Matrix& rho) {
    return (1.0 - x) * rho + (x / d) * rho.trace() * Matrix::Identity(d, d);
}

// (1-x) tr(rho)|0><0| + xi sum_ij (rho_ij |0><i,j| + rho_ji |i,j><0|)
// + (x/d) sum_ijk rho_jk |i,j><i,k|, environment index 1 + i*d + j.
Matrix complement_closed_form(int d, double x, const Matrix& rho) {
    const int de = 1 + d * d;
    const double xi = std::sqrt(x * (1.0 - x) / d);
    Matrix out = Matrix::Zero(de, de);
    out(0, 0) = (1.0 - x) * rho.trace();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out(0, 1 + i * d + j) += xi * rho(i, j);
            out(1 + i * d + j, 0) += xi * rho(j, i);
        }
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                out(1 + i * d + j, 1 + i * d + k) += (x / d) * rho(j, k);
            }
        }
    }
    return out;
}

Matrix transpose_depolarizing_closed_form(double x, const Matrix& rho) {
    return (1.0 - x) * rho +
           (x / 2.0) * (rho.trace() * Matrix::Identity(3, 3) - rho.transpose());
}

}  // namespace

TEST_CASE("NoiseParameter domain") {
    CHECK_THROWS_AS(NoiseParameter(-0.1, 2), ParameterDomainError);
    CHECK_THROWS_AS(NoiseParameter(1.1, 2), ParameterDomainError);
    CHECK_THROWS_AS(NoiseParameter(0.5, 1), ParameterDomainError);
    CHECK_NOTHROW(NoiseParameter(0.0, 2));
    CHECK_NOTHROW(NoiseParameter(1.0, 12));
}

TEST_CASE("depolarizing channel action and structure") {
    std::mt19937_64 rng(31);
    for (int d : {2, 3, 5}) {
        const Matrix rho = test::random_density(d, rng);

        const KrausChannel d0 = depolarizing(NoiseParameter(0.0, d));
        CHECK(frobenius_distance(d0.apply(rho), rho) < 1e-14);

        const KrausChannel d1 = depolarizing(NoiseParameter(1.0, d));
        CHECK(frobenius_distance(d1.apply(rho), (Matrix::Identity(d, d) / d).eval()) <
              1e-14);

        const double x = 0.37;
        const KrausChannel dx = depolarizing(NoiseParameter(x, d));
        CHECK(dx.kraus.size() == static_cast<std::size_t>(1 + d * d));
        CHECK(validate_cpt(dx).tp_residual < 1e-10);
        CHECK(frobenius_distance(dx.apply(rho), depolarizing_closed_form(d, x, rho)) <
              1e-13);
    }

    Matrix ket0 = Matrix::Zero(2, 2);
    ket0(0, 0) = 1.0;
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 0.75;
    expected(1, 1) = 0.25;
    CHECK(frobenius_distance(depolarizing(NoiseParameter(0.5, 2)).apply(ket0), expected) <
          1e-15);
}

TEST_CASE("depolarizing complement matches the closed form") {
    std::mt19937_64 rng(32);
    for (int d : {2, 3, 4}) {
        for (double x : {0.0, 0.3, 0.5, 1.0}) {
            const KrausChannel comp = depolarizing_complement(NoiseParameter(x, d));
            CHECK(comp.dim_out == 1 + d * d);
            CHECK(comp.kraus.size() == static_cast<std::size_t>(d));
            CHECK(validate_cpt(comp).tp_residual < 1e-10);
            const Matrix rho = test::random_density(d, rng);
            CHECK(frobenius_distance(comp.apply(rho), complement_closed_form(d, x, rho)) <
                  1e-13);
        }
    }
}

TEST_CASE("complement limit cases: x=0 reveals nothing, x=1 everything") {
    std::mt19937_64 rng(33);
    const int d = 3;
    const Matrix rho = test::random_density(d, rng);

    const Matrix at0 = depolarizing_complement(NoiseParameter(0.0, d)).apply(rho);
    Matrix expect0 = Matrix::Zero(1 + d * d, 1 + d * d);
    expect0(0, 0) = rho.trace();
    CHECK(frobenius_distance(at0, expect0) < 1e-14);

    const Matrix at1 = depolarizing_complement(NoiseParameter(1.0, d)).apply(rho);
    Matrix expect1 = Matrix::Zero(1 + d * d, 1 + d * d);
    expect1.block(1, 1, d * d, d * d) = kron(Matrix::Identity(d, d), rho) / d;
    CHECK(frobenius_distance(at1, expect1) < 1e-14);
}

TEST_CASE("closed-form complement agrees with the Stinespring path") {
    std::mt19937_64 rng(34);
    // Eq.-level route vs isometric-extension route, both as maps and pointwise
    for (int d : {2, 3, 4}) {
        for (double x : {0.0, 0.3, 0.5, 1.0}) {
            const NoiseParameter p(x, d);
            CHECK(choi_distance(depolarizing_complement(p),
                                complementary(depolarizing(p))) < 1e-9);
        }
    }
    const NoiseParameter p(0.3, 2);
    const Matrix rho = test::random_density(2, rng);
    const StinespringIsometry vi = stinespring(depolarizing(p));
    const Matrix joint = vi.v * rho * vi.v.adjoint();
    CHECK(frobenius_distance(partial_trace(joint, vi.dim_out, vi.dim_env, Subsystem::B),
                             depolarizing_complement(p).apply(rho)) < 1e-12);

    const NoiseParameter p2(0.5, 2);
    const Matrix mixed = Matrix::Identity(2, 2) / 2.0;
    const StinespringIsometry vi2 = stinespring(depolarizing(p2));
    const Matrix joint2 = vi2.v * mixed * vi2.v.adjoint();
    CHECK(frobenius_distance(partial_trace(joint2, vi2.dim_out, vi2.dim_env, Subsystem::B),
                             depolarizing_complement(p2).apply(mixed)) < 1e-12);
}

TEST_CASE("AntiDegradingParams constraint system") {
    for (int d : {2, 3, 5}) {
        for (double x : {0.5, 0.6, 0.75, 0.9, 1.0}) {
            const AntiDegradingParams ap = AntiDegradingParams(NoiseParameter(x, d));
            CHECK(std::abs(ap.beta * ap.beta * x - (1.0 - x)) < 1e-12);
            CHECK(std::abs(d * ap.delta * ap.delta - (2.0 * x - 1.0) / x) < 1e-12);
            CHECK(std::abs(ap.beta * ap.beta + d * ap.delta * ap.delta - 1.0) < 1e-12);
            CHECK(std::abs(ap.xi - std::sqrt(x * (1.0 - x) / d)) < 1e-12);
            CHECK(ap.beta >= 0.0);
            CHECK(ap.delta >= 0.0);
        }
    }

    const AntiDegradingParams boundary(NoiseParameter(0.5, 4));
    CHECK(boundary.beta == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(boundary.delta == 0.0);

    const AntiDegradingParams top(NoiseParameter(1.0, 2));
    CHECK(top.beta == 0.0);
    CHECK(2.0 * top.delta * top.delta == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("anti-degrading map fails below x = 1/2 with the offending value") {
    try {
        antidegrading_map(NoiseParameter(0.49, 3));
        FAIL("expected ParameterDomainError");
    } catch (const ParameterDomainError& e) {
        CHECK(e.d_delta_sq == doctest::Approx(-0.04081632653061228).epsilon(1e-14));
        CHECK(e.d_delta_sq < 0.0);
    }
    CHECK_THROWS_AS(antidegrading_map(NoiseParameter(0.5 - 1e-6, 2)), ParameterDomainError);
    CHECK_NOTHROW(antidegrading_map(NoiseParameter(0.5, 2)));
    CHECK_NOTHROW(antidegrading_map(NoiseParameter(0.5 + 1e-6, 2)));
}

TEST_CASE("anti-degrading map structure and the identity N ∘ D_x^c = D_x") {
    for (int d : {2, 3, 4, 5}) {
        for (double x : {0.5, 0.6, 0.75, 0.9, 1.0}) {
            const NoiseParameter p(x, d);
            const KrausChannel n = antidegrading_map(p);
            CHECK(n.dim_in == 1 + d * d);
            CHECK(n.dim_out == d);
            CHECK(n.kraus.size() == static_cast<std::size_t>(2 * d + d * d * d));
            CHECK(validate_cpt(n).tp_residual < 1e-10);
            CHECK(choi_distance(compose(n, depolarizing_complement(p)), depolarizing(p)) <
                  1e-9);
        }
    }
}

TEST_CASE("transpose-depolarizing channel") {
    std::mt19937_64 rng(35);
    const Matrix rho = test::random_density(3, rng);

    CHECK(frobenius_distance(transpose_depolarizing(0.0, 3).apply(rho), rho) < 1e-14);

    Matrix ket0 = Matrix::Zero(3, 3);
    ket0(0, 0) = 1.0;
    Matrix expected = Matrix::Zero(3, 3);
    expected(1, 1) = 0.5;
    expected(2, 2) = 0.5;
    CHECK(frobenius_distance(transpose_depolarizing(1.0, 3).apply(ket0), expected) <
          1e-15);

    for (double x : {0.0, 0.25, 4.0 / 7.0, 1.0}) {
        const KrausChannel ch = transpose_depolarizing(x, 3);
        CHECK(validate_cpt(ch).tp_residual < 1e-10);
        CHECK(frobenius_distance(ch.apply(rho),
                                 transpose_depolarizing_closed_form(x, rho)) < 1e-13);
    }

    CHECK_THROWS_AS(transpose_depolarizing(0.5, 2), ParameterDomainError);
    CHECK_THROWS_AS(transpose_depolarizing(0.5, 4), ParameterDomainError);
    CHECK_THROWS_AS(transpose_depolarizing(1.5, 3), ParameterDomainError);
}

TEST_CASE("contaminate composes depolarizing noise after the channel") {
    std::mt19937_64 rng(36);
    const KrausChannel lambda = test::random_channel(3, 3, rng);
    const Matrix rho = test::random_density(3, rng);

    CHECK(choi_distance(contaminate(identity_channel(3), 0.3),
                        depolarizing(NoiseParameter(0.3, 3))) < 1e-12);
    CHECK(choi_distance(contaminate(lambda, 0.0), lambda) < 1e-12);

    const Matrix all_mixed = contaminate(lambda, 1.0).apply(rho);
    CHECK(frobenius_distance(all_mixed, (Matrix::Identity(3, 3) / 3.0).eval()) < 1e-13);

    const double x = 0.55;
    const KrausChannel noisy = contaminate(lambda, x);
    CHECK(validate_cpt(noisy).tp_residual < 1e-10);
    const Matrix out = noisy.apply(rho);
    const Matrix expected = (1.0 - x) * lambda.apply(rho) +
                            (x / 3.0) * rho.trace() * Matrix::Identity(3, 3);
    CHECK(frobenius_distance(out, expected) < 1e-13);

    const KrausChannel rect(2, 3, {Matrix::Zero(3, 2), Matrix::Zero(3, 2),
                                   [] {
                                       Matrix k = Matrix::Zero(3, 2);
                                       k(0, 0) = 1.0;
                                       k(1, 1) = 1.0;
                                       return k;
                                   }()});
    CHECK_THROWS_AS(contaminate(rect, 0.5), DimensionError);
}
