#pragma once

#include "uqr/diamond.hpp"

namespace uqr {

/// Raised when (type, ell) needs the substitution table; carries the
/// replacement root systems.
struct ExcludedTypeError : std::domain_error {
	std::vector<RootSystemType> substitution;
	explicit ExcludedTypeError(std::vector<RootSystemType> sub)
	    : std::domain_error("small quantum group described by a different root system"),
	      substitution(std::move(sub))
	{
	}
};

/// One toral solution: subgroups H1, H2 of pi1 with the pairing omega, its
/// (d, k) encoding when pi1 is cyclic, and the preimage lattices of H1, H2
/// in the weight lattice.
struct R0Solution {
	RootSystemType type;
	long ell = 0;
	Pairing omega; // H1 = omega.H1, H2 = omega.H2 over the designated pi1
	std::optional<std::pair<long, long>> dk;
	IntegerLattice lambda1, lambda2;
	bool starred = false;

	std::string key() const; // canonical, used for ordering and table comparison
};

/// All solutions for (g, ell, Lambda'): empty when Lambda' is a proper
/// sublattice of Lambda_R^{[ell]} (the necessary-kernel criterion), otherwise
/// the pairing candidates surviving the diamond-equations. Throws
/// ExcludedTypeError on the substitution-table pairs.
std::vector<R0Solution> solve(const RootSystemData& g, long ell,
                              const IntegerLattice& lambda_prime);

/// D_n with even n only; identical to solve on the [ell] kernel.
std::vector<R0Solution> dn_even_solutions(const RootSystemData& g, long ell);

/// True iff Lusztig's kernel 2 Lambda_R^{(ell)} equals Lambda_R^{[ell]}.
bool kernel_is_starred(const RootSystemData& g, long ell);

/// Coefficient function f(mu, nu) of the toral part on Lambda/Lambda',
/// supported on the images of lambda1 x lambda2.
struct FFunction {
	const RootSystemData* g = nullptr;
	long ell = 0;
	LatticeQuotient dom; // (lambda1 + lambda2) / Lambda'
	Subgroup S1, S2;     // support subgroups of dom
	std::vector<CycNum> val; // |S1| x |S2|, indexed by support positions

	const CycNum& at_support(long i, long j) const { return val[i * S2.size() + j]; }
	/// f at arbitrary classes of dom (zero off support)
	CycNum at(const AbelianGroup::Elem& mu, const AbelianGroup::Elem& nu) const;
	long support_pos1(const AbelianGroup::Elem& mu) const; // -1 if off support
	long support_pos2(const AbelianGroup::Elem& nu) const;
};

FFunction f_from_solution(const R0Solution& sol, const IntegerLattice& lambda_prime);

/// Exact check of the three coefficient-equation families over the support.
/// Throws std::length_error when |dom| exceeds the bound.
bool check_f_equations(const FFunction& f, long bound = 200);

/// g(mu-bar, nu-bar) = |Lambda_R/Lambda'| q^{(mu,nu)} f(mu,nu) on pi1 x pi1;
/// verifies representative-independence across every fiber and that the
/// reconstruction q^{-(mu,nu)} g / |Lambda_R/Lambda'| reproduces f. Throws
/// std::domain_error when the transform is not well defined.
GFunction fg_roundtrip(const FFunction& f);

} // namespace uqr
