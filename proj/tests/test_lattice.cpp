#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqr/lattice.hpp"

using namespace uqr;

namespace {

Mat diag_mat(const std::vector<long>& d)
{
	Mat m((long)d.size(), (long)d.size());
	for (long i = 0; i < (long)d.size(); ++i) m.at(i, i) = d[i];
	return m;
}

// Brute-force centralizer: enumerate Lambda_W modulo ell*s*Lambda_W (s the
// Gram denominator), keep the cosets pairing into ell*Z against every
// generator of L2, and rebuild the lattice from the survivors.
IntegerLattice cent_q_bruteforce(const RootSystemData& g, const IntegerLattice& L2, long ell)
{
	long n = g.rank();
	Int s = 1;
	for (long i = 0; i < n; ++i)
		for (long j = 0; j < n; ++j) s = lcm(s, den(g.gram_weights.at(i, j)));
	long mod = ell * to_long(s);
	std::vector<std::vector<Int>> keep;
	std::vector<long> idx(n, 0);
	while (true) {
		std::vector<Int> v(idx.begin(), idx.end());
		bool ok = true;
		for (long j = 0; j < n && ok; ++j) {
			Rat p = g.killing_zz(v, L2.basis().col(j));
			if (!is_integral(p / ell)) ok = false;
		}
		if (ok) keep.push_back(v);
		long k = 0;
		while (k < n && ++idx[k] == mod) idx[k++] = 0;
		if (k == n) break;
	}
	Mat gens(n, (long)keep.size() + n);
	for (long c = 0; c < (long)keep.size(); ++c)
		for (long i = 0; i < n; ++i) gens.at(i, c) = keep[c][i];
	for (long j = 0; j < n; ++j) gens.at(j, (long)keep.size() + j) = mod;
	return IntegerLattice(g, std::move(gens));
}

} // namespace

TEST_CASE("ell-lattice generators")
{
	const auto& a1 = build(parse_type('A', 1));
	// <5 alpha> = <10 lambda> since ell_alpha = 5
	CHECK(ell_lattice_round(a1, LatticeBase::roots, 5) ==
	      IntegerLattice(a1, diag_mat({10})));
	CHECK(ell_lattice_round(a1, LatticeBase::roots, 6) ==
	      IntegerLattice(a1, diag_mat({6}))); // <3 alpha>
	CHECK(ell_lattice_square(a1, LatticeBase::roots, 6) ==
	      IntegerLattice(a1, diag_mat({12}))); // <6 alpha> = 6 Lambda_R

	const auto& g2 = build(parse_type('G', 2));
	// (G2, roots, 6): ell_1 = 3, ell_2 = 1 -> <3 alpha_1, alpha_2>
	Mat expect(2, 2);
	for (long i = 0; i < 2; ++i) {
		expect.at(i, 0) = Int(3) * g2.cartan.at(i, 0);
		expect.at(i, 1) = g2.cartan.at(i, 1);
	}
	CHECK(ell_lattice_round(g2, LatticeBase::roots, 6) == IntegerLattice(g2, std::move(expect)));

	const auto& b2 = build(parse_type('B', 2));
	// B2 [6] on roots: <3 alpha_1, 6 alpha_2>
	Mat eb(2, 2);
	for (long i = 0; i < 2; ++i) {
		eb.at(i, 0) = Int(3) * b2.cartan.at(i, 0);
		eb.at(i, 1) = Int(6) * b2.cartan.at(i, 1);
	}
	CHECK(ell_lattice_square(b2, LatticeBase::roots, 6) == IntegerLattice(b2, std::move(eb)));

	const auto& c3 = build(parse_type('C', 3));
	// (C3, weights, 8): <8 l1, 8 l2, 4 l3>
	CHECK(ell_lattice_square(c3, LatticeBase::weights, 8) ==
	      IntegerLattice(c3, diag_mat({8, 8, 4})));

	CHECK_THROWS_AS(ell_lattice_round(a1, LatticeBase::roots, 2), std::domain_error);
}

TEST_CASE("fractional generators must land in the weight lattice")
{
	const auto& b2 = build(parse_type('B', 2));
	// ell<1/2 lambda_1, lambda_2> is fine for even ell
	RatVec h1{frac(1, 2), Rat(0)}, l2{Rat(0), Rat(1)};
	CHECK_NOTHROW(IntegerLattice(b2, Rat(6), {h1, l2}));
	CHECK_THROWS_AS(IntegerLattice(b2, Rat(5), {h1, l2}), std::domain_error);
}

TEST_CASE("centralizer lattices: quoted examples")
{
	const auto& a1 = build(parse_type('A', 1));
	auto lw = weight_lattice(a1);
	auto lr = root_lattice(a1);
	// Cent^q(Lambda_R) for A1, ell = 4 -> <4 lambda>
	CHECK(cent_q(a1, lw, lr, 4) == IntegerLattice(a1, diag_mat({4})));

	// Cent^q(Lambda_W) for B2, odd ell -> ell Lambda_W
	const auto& b2 = build(parse_type('B', 2));
	auto lw2 = weight_lattice(b2);
	for (long ell : {3L, 5L, 7L})
		CHECK(cent_q(b2, lw2, lw2, ell) == IntegerLattice(b2, diag_mat({ell, ell})));

	CHECK_THROWS_AS(cent_q(a1, lr, lw, 4), std::domain_error); // containment violated
}

TEST_CASE("lemma sweeps: centralizers equal the bracket lattices")
{
	std::vector<RootSystemType> types;
	for (long n = 1; n <= 6; ++n) types.push_back(parse_type('A', n));
	for (long n = 2; n <= 6; ++n) types.push_back(parse_type('B', n));
	for (long n = 3; n <= 6; ++n) types.push_back(parse_type('C', n));
	for (long n = 4; n <= 6; ++n) types.push_back(parse_type('D', n));
	types.push_back(parse_type('E', 6));
	types.push_back(parse_type('F', 4));
	types.push_back(parse_type('G', 2));

	for (const auto& t : types) {
		const auto& g = build(t);
		auto lw = weight_lattice(g);
		auto lr = root_lattice(g);
		for (long ell = 3; ell <= 12; ++ell) {
			CAPTURE(t.str());
			CAPTURE(ell);
			// Cent^q(Lambda_R) = Lambda_W^{[ell]}
			CHECK(cent_q(g, lw, lr, ell) == ell_lattice_square(g, LatticeBase::weights, ell));
			// Cent^q(Lambda_W) cap Lambda_R = Lambda_R^{[ell]}
			CHECK(intersect(cent_q(g, lw, lw, ell), lr) ==
			      ell_lattice_square(g, LatticeBase::roots, ell));
		}
	}
}

TEST_CASE("centralizer against the coset-enumeration oracle")
{
	std::vector<RootSystemType> types = {parse_type('A', 1), parse_type('A', 2),
	                                     parse_type('A', 3), parse_type('B', 2),
	                                     parse_type('B', 3), parse_type('C', 3),
	                                     parse_type('G', 2)};
	for (const auto& t : types) {
		const auto& g = build(t);
		auto lw = weight_lattice(g);
		auto lr = root_lattice(g);
		for (long ell = 3; ell <= 8; ++ell) {
			CAPTURE(t.str());
			CAPTURE(ell);
			CHECK(cent_q(g, lw, lr, ell) == cent_q_bruteforce(g, lr, ell));
			CHECK(cent_q(g, lw, lw, ell) == cent_q_bruteforce(g, lw, ell));
		}
	}
}

TEST_CASE("intersection")
{
	const auto& a1 = build(parse_type('A', 1));
	auto l2 = IntegerLattice(a1, diag_mat({2}));
	auto l3 = IntegerLattice(a1, diag_mat({3}));
	CHECK(intersect(l2, l3) == IntegerLattice(a1, diag_mat({6})));
	CHECK(intersect(l2, l2) == l2);

	// A2, ell = 3: 3 Lambda_W cap Lambda_R, against element enumeration
	const auto& a2 = build(parse_type('A', 2));
	auto l3w = IntegerLattice(a2, diag_mat({3, 3}));
	auto lr = root_lattice(a2);
	auto meet = intersect(l3w, lr);
	// oracle: x in both iff 3 | x_i and x in Lambda_R; enumerate mod 9
	Mat gens(2, 81 + 2);
	long c = 0;
	for (long x = 0; x < 9; ++x)
		for (long y = 0; y < 9; ++y) {
			std::vector<Int> v{x, y};
			if (x % 3 == 0 && y % 3 == 0 && lr.contains(v)) {
				gens.at(0, c) = x;
				gens.at(1, c) = y;
				++c;
			}
		}
	gens.at(0, 81) = 9;
	gens.at(1, 82) = 9;
	CHECK(meet == IntegerLattice(a2, std::move(gens)));
}

TEST_CASE("quotients")
{
	const auto& d6 = build(parse_type('D', 6));
	LatticeQuotient q(weight_lattice(d6), root_lattice(d6));
	CHECK(q.group().factors == std::vector<long>({2, 2}));

	const auto& a3 = build(parse_type('A', 3));
	LatticeQuotient q2(weight_lattice(a3), root_lattice(a3));
	CHECK(q2.group().factors == std::vector<long>{4});

	auto lr = root_lattice(a3);
	LatticeQuotient q3(lr, lr);
	CHECK(q3.group().factors.empty());
	CHECK(q3.order() == 1);

	// order = |det B2| / |det B1|
	const auto& b3 = build(parse_type('B', 3));
	auto sq = ell_lattice_square(b3, LatticeBase::roots, 6);
	LatticeQuotient q4(weight_lattice(b3), sq);
	CHECK(Int(q4.order()) * weight_lattice(b3).det_abs() == sq.det_abs());

	// project/lift round trip on every element
	for (long i = 0; i < q4.order(); ++i) {
		auto e = q4.group().elem_at(i);
		CHECK(q4.project(q4.lift(e)) == e);
	}

	CHECK_THROWS_AS(LatticeQuotient(root_lattice(a3), weight_lattice(a3)), std::domain_error);
}
