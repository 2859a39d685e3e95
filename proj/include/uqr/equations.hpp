#pragma once

#include "uqr/abelian.hpp"

namespace uqr {

/// Candidate solution table g(x,y) over a finite abelian group, exact values.
struct GFunction {
	AbelianGroup G;
	std::vector<CycNum> val; // |G|^2 entries, row-major by element index

	const CycNum& at(const AbelianGroup::Elem& x, const AbelianGroup::Elem& y) const
	{
		return val[G.index_of(x) * G.order() + G.index_of(y)];
	}
	CycNum& at(const AbelianGroup::Elem& x, const AbelianGroup::Elem& y)
	{
		return val[G.index_of(x) * G.order() + G.index_of(y)];
	}
	bool operator==(const GFunction& o) const;
	std::string key() const; // canonical serialization for dedup
};

/// Bihomomorphism omega: H1 x H2 -> C^x given by root-of-unity exponents on
/// basis pairs: omega(b_i, c_j) = zeta_{g_ij}^{t_ij}, g_ij = gcd(|b_i|, |c_j|).
struct Pairing {
	Subgroup H1, H2;
	std::vector<std::vector<long>> t; // exponents per basis pair

	CycNum omega(const AbelianGroup::Elem& x, const AbelianGroup::Elem& y) const;
	CycNum omega_inv(const AbelianGroup::Elem& x, const AbelianGroup::Elem& y) const;
	long pair_order(size_t i, size_t j) const
	{
		return gcd_long(H1.basis_orders[i], H2.basis_orders[j]);
	}
};

/// g(x,y) = (1/d) omega(x,y) [x in H1][y in H2]
GFunction pairing_solution(const Pairing& p);

/// All 2|G|^2 + 2 group-equations, exactly.
bool check_group_equations(const GFunction& g);

/// All pairings (H1, H2, omega) with |H1| = |H2|, deduplicated by the induced
/// solution table.
std::vector<Pairing> enumerate_pairings(const AbelianGroup& G, long bound = 16);

/// Diamond data ready for equation checking over G: per element a of A, a
/// character phi1(a) of G and a shift phi2(a) in G, plus the excluded
/// subgroup D of shifts (equations quantify over A \ D).
struct Diamond {
	AbelianGroup G, A;
	std::vector<Character> phi1;            // indexed by A element
	std::vector<AbelianGroup::Elem> phi2;   // indexed by A element
	std::vector<char> inB, inC;             // kernel indicators over A elements
	std::vector<char> excluded;             // shifts carrying no equation
};

/// Cyclic diamond with A = Z_N, phi1(a) = (x -> zeta_N^{m x}), phi2(a) = l*gen,
/// B = ker phi1 and C = ker phi2. When B = C = A there are no nontrivial
/// equations at all; otherwise every nonzero shift carries equations (this is
/// the split the closed-form criterion encodes).
Diamond cyclic_diamond(long N, long l, long m);

bool check_diamond_equations(const GFunction& g, const Diamond& dia);
/// Only the two scaling equations; agrees with the full check on pairing-form g.
bool scaling_equations_only(const GFunction& g, const Diamond& dia);

/// Closed-form solvability criterion for the cyclic diamond: true iff
/// N | m and N | l, or gcd(N, d*l, k*l - (N/d)*m) = 1.
bool gcd_criterion(long N, long d, long k, long l, long m);

} // namespace uqr
