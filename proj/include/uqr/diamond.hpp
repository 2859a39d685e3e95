#pragma once

#include "uqr/equations.hpp"
#include "uqr/lattice.hpp"

#include <array>
#include <optional>

namespace uqr {

/// Fundamental group Lambda_W/Lambda_R in the designated presentation (the
/// classes of the designated fundamental weights as basis), with exact
/// translation from weight-coordinate vectors.
struct Pi1Map {
	const RootSystemData* g = nullptr;
	LatticeQuotient q; // Lambda_W / Lambda_R
	AbelianGroup grp;
	std::vector<std::vector<Int>> gen_reps;
	std::vector<AbelianGroup::Elem> lookup; // raw quotient index -> designated coords

	AbelianGroup::Elem project(const std::vector<Int>& v) const;
	std::vector<Int> rep(const AbelianGroup::Elem& x) const;
};

Pi1Map make_pi1_map(const RootSystemData& g);

/// The lattice quotient diamond of (g, ell, Lambda'): A = Cent^q(Lambda_R)/L',
/// B = Cent^q(Lambda_W)/L', C = (Cent^q(Lambda_R) cap Lambda_R)/L',
/// D = (Cent^q(Lambda_W) cap Lambda_R)/L', with the injection data realized as
/// exact characters of pi1 and shifts in pi1.
struct DiamondSpec {
	const RootSystemData* g = nullptr;
	long ell = 0;
	IntegerLattice lambda_prime;
	IntegerLattice latA, latB, latC, latD;
	LatticeQuotient qA;
	Pi1Map pi1;
	Diamond eq; // ready for check_diamond_equations over G = pi1
	Subgroup subB, subC, subD;

	/// (N, m mod N, l mod N) for cyclic pi1 with A of order N: the character
	/// and shift of the computed generator of A, in the designated basis.
	std::optional<std::array<long, 3>> cyclic_mod;
};

DiamondSpec build_diamond(const RootSystemData& g, long ell, const IntegerLattice& lambda_prime);

/// Closed-form cyclic parameters: ell_[n] = ell/gcd(ell, d_n) and
/// m_[n] = N (lambda_n, lambda_n) / gcd(ell, d_n), for the last fundamental
/// weight lambda_n. Requires cyclic pi1.
struct CyclicParams {
	long N, m_n, ell_n;
};
CyclicParams cyclic_params(const RootSystemData& g, long ell);

enum class DiamondCase { I, II, III };
/// Case split on (N | m, N | l, gcd(m, N) = 1); throws when the parameters
/// fit none of the three shapes (e.g. 1 < gcd(m, N) < N).
DiamondCase classify_case(long N, long m, long l);
DiamondCase classify_case(const RootSystemData& g, long ell);

} // namespace uqr
