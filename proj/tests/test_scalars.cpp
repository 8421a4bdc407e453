#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "dicalc/cyclotomic.hpp"
#include "dicalc/laurent.hpp"

using namespace dicalc;

TEST_CASE("cyclotomic polynomials match hand-computed small cases") {
    CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});       // x - 1
    CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});        // x + 1
    CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});     // x^2 + 1
    CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});    // x^2 - x + 1
    CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
    for (unsigned m : {1u, 2u, 3u, 5u, 8u, 16u, 24u, 60u}) {
        IntPoly p = cyclotomic_polynomial(m);
        CHECK(poly_degree(p) == static_cast<int>(euler_phi(m)));
        CHECK(p.back() == 1);
    }
}

TEST_CASE("quantum integers in q") {
    CyclotomicField f3(3);
    CHECK(quantum_integer_q(&f3, 0).is_zero());
    CHECK(quantum_integer_q(&f3, 1) == Cyc(&f3, 1));
    // [2]_q = 1 at a primitive 6th root of unity
    CHECK(quantum_integer_q(&f3, 2) == Cyc(&f3, 1));
    CHECK(quantum_integer_q(&f3, 3).is_zero());

    CyclotomicField f4(4);
    // q = exp(i pi/4): q^2 + 1 + q^-2 = i + 1 - i = 1
    CHECK(quantum_integer_q(&f4, 3) == Cyc(&f4, 1));
    auto e = quantum_integer_q(&f4, 3).embed();
    CHECK(std::abs(e - std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("root of unity identities") {
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u, 15u}) {
        CyclotomicField f(n);
        Cyc qn = Cyc::q_power(&f, static_cast<long>(n));
        CHECK(qn == -Cyc(&f, 1));
        CHECK(Cyc::q_power(&f, 2L * n) == Cyc(&f, 1));
        // [k]_q invertible for 1 <= k <= n-1, [n]_q = 0
        for (unsigned k = 1; k < n; ++k) {
            Cyc qk = quantum_integer_q(&f, static_cast<int>(k));
            REQUIRE_FALSE(qk.is_zero());
            CHECK(qk * qk.inverse() == Cyc(&f, 1));
        }
        CHECK(quantum_integer_q(&f, static_cast<int>(n)).is_zero());
    }
}

TEST_CASE("inverse examples") {
    CyclotomicField f3(3);
    CHECK(Cyc(&f3, 1).inverse() == Cyc(&f3, 1));
    CHECK(quantum_integer_q(&f3, 2).inverse() == Cyc(&f3, 1));

    CyclotomicField f4(4);
    Cyc two_q = quantum_integer_q(&f4, 2);
    // [2]_q^2 = [3]_q + [1]_q = 2, so 1/[2]_q = [2]_q/2
    CHECK(two_q * two_q == Cyc(&f4, 2));
    CHECK(two_q.inverse() == two_q * Cyc(&f4, make_rational(1, 2)));
}

TEST_CASE("embedding is a ring homomorphism within 1e-12") {
    std::mt19937 rng(7);
    for (unsigned n : {3u, 4u, 7u}) {
        CyclotomicField f(n);
        std::uniform_int_distribution<int> coeff(-4, 4);
        auto random_elt = [&] {
            std::vector<Rational> c(f.degree());
            for (auto& x : c) x = make_rational(coeff(rng), 1 + std::abs(coeff(rng)));
            return Cyc::from_coeffs(&f, c);
        };
        for (int trial = 0; trial < 20; ++trial) {
            Cyc prod(&f, 1);
            std::complex<double> expected(1.0, 0.0);
            int factors = 1 + static_cast<int>(rng() % 10);
            for (int i = 0; i < factors; ++i) {
                Cyc x = random_elt();
                prod = prod * x;
                expected *= x.embed();
            }
            CHECK(std::abs(prod.embed() - expected) < 1e-12);
            Cyc a = random_elt(), b = random_elt();
            CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-12);
        }
    }
}

TEST_CASE("embedding of q at n=3") {
    CyclotomicField f3(3);
    auto q = Cyc::q_power(&f3, 1).embed();
    CHECK(std::abs(q - std::complex<double>(0.5, 0.8660254037844386)) < 1e-12);
}

TEST_CASE("laurent polynomials") {
    CHECK(quantum_integer_v(1) == Laurent(1));
    CHECK(quantum_integer_v(2) == Laurent::v(1) + Laurent::v(-1));
    CHECK(quantum_integer_v(2).str() == "v + v^-1");
    CHECK(quantum_integer_v(0).is_zero());

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3), exp(-3, 3);
    auto random_poly = [&] {
        Laurent p;
        for (int i = 0; i < 4; ++i) p += Laurent::monomial(coeff(rng), exp(rng));
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Laurent a = random_poly(), b = random_poly();
        CHECK(a * b == b * a);
        CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
        CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
    }
}

TEST_CASE("special small fields") {
    // n = 1: q = -1 over the rationals
    CyclotomicField f1(1);
    CHECK(f1.degree() == 1);
    CHECK(Cyc::q_power(&f1, 1) == Cyc(&f1, -1));
    // n = 2: Gaussian rationals
    CyclotomicField f2(2);
    CHECK(f2.degree() == 2);
    Cyc i = Cyc::q_power(&f2, 1);
    CHECK(i * i == Cyc(&f2, -1));
}
