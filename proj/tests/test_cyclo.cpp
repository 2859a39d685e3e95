#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqr/cyclo.hpp"

#include <random>

using namespace uqr;

TEST_CASE("cyclotomic polynomials")
{
	CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
	CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
	CHECK(cyclotomic_poly(4) == std::vector<Int>{1, 0, 1});
	CHECK(cyclotomic_poly(6) == std::vector<Int>{1, -1, 1});
	CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
	for (long M : {5L, 7L, 9L, 24L, 36L, 60L})
		CHECK((long)cyclotomic_poly(M).size() == euler_phi(M) + 1);
}

TEST_CASE("roots of unity and q powers")
{
	// q_pow(4, 1) is the canonical primitive fourth root
	CHECK(q_pow(4, 1) == CycNum::root_of_unity(4, 1));
	// exp(2 pi i (5/2)/5) = exp(pi i) = -1
	CHECK(q_pow(5, frac(5, 2)) == CycNum::from_rat(-1));
	// exponent additivity
	CHECK(q_pow(6, frac(1, 2)) * q_pow(6, frac(1, 2)) == q_pow(6, 1));

	for (long ell : {3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L})
		CHECK(q_pow(ell, 1).multiplicative_order() == ell);
}

TEST_CASE("q integers and factorials")
{
	CHECK(qfact(5, 0) == CycNum::from_rat(1));
	CHECK(qint(5, 5).is_zero());          // q primitive 5th root: [5]_q = 0
	CHECK(qint(4, 2).is_zero());          // ell = 4: [2]_q = q + q^{-1} = 0
	CHECK(qint(6, 2) == CycNum::from_rat(1)); // primitive 6th root: q + q^{-1} = 1
	CHECK(qint(6, 1) == CycNum::from_rat(1));
	// (q^2 - q^-2)/(q - q^-1) computed symbolically matches [2]_q
	for (long ell : {5L, 6L, 7L, 8L}) {
		CycNum n2 = q_pow(ell, 2) - q_pow(ell, -2);
		CycNum d1 = q_pow(ell, 1) - q_pow(ell, -1);
		CHECK(n2 / d1 == qint(ell, 2));
	}
}

TEST_CASE("field axioms on random samples")
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<long> coef(-3, 3);
	for (long M : {3L, 8L, 12L, 15L, 24L, 60L}) {
		long deg = euler_phi(M);
		auto rnd = [&]() {
			CycNum x;
			for (long i = 0; i < deg; ++i)
				x += Rat(coef(rng)) * CycNum::root_of_unity(M, i);
			return x;
		};
		for (int t = 0; t < 20; ++t) {
			CycNum a = rnd(), b = rnd(), c = rnd();
			CHECK((a + b) * c == a * c + b * c);
			CHECK((a * b) * c == a * (b * c));
			CHECK(a + b == b + a);
		}
	}
}

TEST_CASE("inverses at every order up to 24")
{
	std::mt19937 rng(11);
	std::uniform_int_distribution<long> coef(-2, 2);
	CycNum one = CycNum::from_rat(1);
	for (long M = 3; M <= 24; ++M) {
		long deg = euler_phi(M);
		int found = 0;
		while (found < 100) {
			CycNum x;
			for (long i = 0; i < deg; ++i)
				x += Rat(coef(rng)) * CycNum::root_of_unity(M, i);
			if (x.is_zero()) continue;
			++found;
			CHECK(x * x.inv() == one);
		}
	}
	CHECK_THROWS_AS(CycNum().inv(), std::domain_error);
	CHECK(qfact(5, 1).inv() == one); // inv([1]_q) = 1
}

TEST_CASE("q_pow additivity on random rationals")
{
	std::mt19937 rng(3);
	std::uniform_int_distribution<long> nu(-8, 8), de(1, 4);
	for (long ell : {3L, 5L, 8L, 12L})
		for (int t = 0; t < 25; ++t) {
			Rat a = frac(nu(rng), de(rng)), b = frac(nu(rng), de(rng));
			CHECK(q_pow(ell, a) * q_pow(ell, b) == q_pow(ell, a + b));
		}
}

TEST_CASE("display helpers stay out of the arithmetic")
{
	CycNum z = CycNum::root_of_unity(12, 1);
	CHECK(z.str() == "z12");
	CHECK(std::abs(z.approx() - std::polar(1.0, 2 * M_PI / 12)) < 1e-12);
	CHECK((z - z).str() == "0");
}
