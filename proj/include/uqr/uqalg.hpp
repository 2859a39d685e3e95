#pragma once

#include "uqr/rsolver.hpp"

#include <map>

namespace uqr {

/// Finite-dimensional u_q(sl2, Lambda, Lambda') with exact cyclotomic
/// coefficients. Elements are sparse combinations of PBW monomials
/// E^a K_mu F^c with 0 <= a, c < ell_alpha and mu in Lambda/Lambda'; the
/// normal form is unique and multiplication rewrites against the defining
/// relations (the F-E commutator table is derived from E F - F E at build
/// time, never transcribed).
class UqSl2 {
public:
	struct Mono {
		int a;
		long k; // group index in Lambda/Lambda'
		int c;
		auto operator<=>(const Mono&) const = default;
	};
	using Elem = std::map<Mono, CycNum>;
	using Mono2 = std::pair<Mono, Mono>;
	using Elem2 = std::map<Mono2, CycNum>;
	using Mono3 = std::array<Mono, 3>;
	using Elem3 = std::map<Mono3, CycNum>;

	UqSl2(long ell, const IntegerLattice& lambda, const IntegerLattice& lambda_prime);

	long ell() const { return ell_; }
	long ell_alpha() const { return ell_alpha_; }
	Int dimension() const; // |Lambda/Lambda'| * ell_alpha^2
	const LatticeQuotient& torus() const { return q_quot_; }
	const AbelianGroup& torus_group() const { return grp_; }

	Elem one() const;
	Elem E() const;
	Elem F() const;
	Elem K(const AbelianGroup::Elem& mu) const;
	Elem K_class_of(const std::vector<Int>& v) const;
	std::vector<Elem> generators() const; // E, F, K of each torus generator

	Elem mul(const Elem& x, const Elem& y) const;
	Elem add(const Elem& x, const Elem& y) const;
	Elem scale(const CycNum& c, const Elem& x) const;

	Elem2 coproduct(const Elem& x) const;
	CycNum counit(const Elem& x) const;
	Elem antipode(const Elem& x) const;

	Elem2 mul2(const Elem2& x, const Elem2& y) const;
	Elem2 tensor(const Elem& x, const Elem& y) const;
	Elem2 swap_legs(const Elem2& x) const;
	Elem3 mul3(const Elem3& x, const Elem3& y) const;

	/// legs: place a two-leg element into the chosen legs of the triple
	/// tensor (0-based), identity elsewhere.
	Elem3 embed(const Elem2& x, int leg1, int leg2) const;
	/// apply the coproduct to one leg of a two-leg element
	Elem3 coproduct_leg(const Elem2& x, int leg) const;

	Elem2 theta() const;
	Elem2 theta_bar() const;
	Elem2 assemble_R0(const R0Solution& sol) const;
	Elem2 assemble_R(const R0Solution& sol) const;
	/// inverse candidate built from conjugate data (certified by the caller)
	Elem2 assemble_R_inverse(const R0Solution& sol) const;

	struct Report {
		bool invertible = false;
		bool intertwines = false; // R Delta(h) = Delta^op(h) R on generators
		bool coproduct_first = false;  // (Delta x Id)(R) = R13 R23
		bool coproduct_second = false; // (Id x Delta)(R) = R13 R12
		bool all() const { return invertible && intertwines && coproduct_first && coproduct_second; }
	};
	Report verify_quasitriangular(const Elem2& R, const Elem2& Rinv_candidate) const;
	Report verify_solution(const R0Solution& sol) const;

private:
	long ell_, ell_alpha_;
	LatticeQuotient q_quot_; // Lambda/Lambda'
	AbelianGroup grp_;
	long alpha_idx_ = 0, alpha_neg_idx_ = 0;
	std::vector<std::vector<Int>> lifts_;    // representative per group index
	std::vector<CycNum> qpow_alpha_;         // q^{(mu, alpha)} per group index
	CycNum q_, qinv_;
	Pi1Map pi1_;
	std::vector<std::vector<CycNum>> qform_; // q^{(mu, nu)} per index pair
	mutable std::map<std::pair<int, int>, Elem> fe_cache_;

	const Elem& fe_table(int c, int a) const;
	Elem mono_mul(const Mono& m1, const CycNum& coef, const Mono& m2) const;
	static void accum(Elem& into, const Mono& m, const CycNum& c);
};

/// Convenience: the solution's own algebra (Lambda = the solution's support
/// lattice, Lambda' = Lambda_R^{[ell]}).
UqSl2 algebra_for(const R0Solution& sol);

} // namespace uqr
