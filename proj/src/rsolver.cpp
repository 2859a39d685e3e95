#include "uqr/rsolver.hpp"

#include <algorithm>
#include <sstream>

namespace uqr {

std::string R0Solution::key() const
{
	std::ostringstream os;
	auto emit_sub = [&](const Subgroup& h) {
		os << h.size() << ":";
		for (const auto& e : h.elems) os << h.G.index_of(e) << ",";
		os << "/";
	};
	emit_sub(omega.H1);
	emit_sub(omega.H2);
	os << "w:";
	for (size_t i = 0; i < omega.t.size(); ++i)
		for (size_t j = 0; j < omega.t[i].size(); ++j)
			os << omega.t[i][j] << "(" << omega.pair_order(i, j) << "),";
	return os.str();
}

bool kernel_is_starred(const RootSystemData& g, long ell)
{
	return lusztig_kernel(g, ell) == ell_lattice_square(g, LatticeBase::roots, ell);
}

namespace {

IntegerLattice preimage_lattice(const Pi1Map& pi1, const Subgroup& H)
{
	const RootSystemData& g = *pi1.g;
	Mat gens(g.rank(), g.rank() + (long)H.elems.size());
	for (long j = 0; j < g.rank(); ++j)
		for (long i = 0; i < g.rank(); ++i) gens.at(i, j) = g.cartan.at(i, j);
	for (long c = 0; c < (long)H.elems.size(); ++c) {
		std::vector<Int> v = pi1.rep(H.elems[c]);
		for (long i = 0; i < g.rank(); ++i) gens.at(i, g.rank() + c) = v[i];
	}
	return IntegerLattice(g, std::move(gens));
}

std::optional<std::pair<long, long>> dk_of(const AbelianGroup& pi1grp, const Pairing& p)
{
	if (pi1grp.rank() > 1) return std::nullopt;
	long d = p.H1.size();
	if (d == 1) return std::make_pair(1L, 1L);
	long t = p.t[0][0];
	return std::make_pair(d, t == 0 ? d : t);
}

} // namespace

std::vector<R0Solution> solve(const RootSystemData& g, long ell,
                              const IntegerLattice& lambda_prime)
{
	if (ell <= 2) throw std::domain_error("ell must exceed 2");
	if (auto sub = substitute_excluded(g.type, ell)) throw ExcludedTypeError(*sub);

	DiamondSpec dia = build_diamond(g, ell, lambda_prime);
	// necessary kernel: solutions require Lambda' = Cent^q(Lambda_W) cap Lambda_R
	if (dia.subD.size() > 1) return {};

	std::vector<R0Solution> out;
	for (const Pairing& p : enumerate_pairings(dia.pi1.grp)) {
		GFunction gf = pairing_solution(p);
		if (!check_diamond_equations(gf, dia.eq)) continue;
		R0Solution sol;
		sol.type = g.type;
		sol.ell = ell;
		sol.omega = p;
		sol.dk = dk_of(dia.pi1.grp, p);
		sol.lambda1 = preimage_lattice(dia.pi1, p.H1);
		sol.lambda2 = preimage_lattice(dia.pi1, p.H2);
		sol.starred = kernel_is_starred(g, ell);
		out.push_back(std::move(sol));
	}
	std::sort(out.begin(), out.end(),
	          [](const R0Solution& a, const R0Solution& b) { return a.key() < b.key(); });
	return out;
}

std::vector<R0Solution> dn_even_solutions(const RootSystemData& g, long ell)
{
	if (g.type.family != Family::D || g.rank() % 2)
		throw std::domain_error("dn_even_solutions: root system must be D_n with even n");
	return solve(g, ell, ell_lattice_square(g, LatticeBase::roots, ell));
}

CycNum FFunction::at(const AbelianGroup::Elem& mu, const AbelianGroup::Elem& nu) const
{
	long i = support_pos1(mu), j = support_pos2(nu);
	if (i < 0 || j < 0) return CycNum();
	return at_support(i, j);
}

long FFunction::support_pos1(const AbelianGroup::Elem& mu) const
{
	auto it = std::lower_bound(S1.elems.begin(), S1.elems.end(), mu,
	                           [&](const AbelianGroup::Elem& a, const AbelianGroup::Elem& b) {
		                           return dom.group().index_of(a) < dom.group().index_of(b);
	                           });
	if (it == S1.elems.end() || *it != mu) return -1;
	return (long)(it - S1.elems.begin());
}

long FFunction::support_pos2(const AbelianGroup::Elem& nu) const
{
	auto it = std::lower_bound(S2.elems.begin(), S2.elems.end(), nu,
	                           [&](const AbelianGroup::Elem& a, const AbelianGroup::Elem& b) {
		                           return dom.group().index_of(a) < dom.group().index_of(b);
	                           });
	if (it == S2.elems.end() || *it != nu) return -1;
	return (long)(it - S2.elems.begin());
}

FFunction f_from_solution(const R0Solution& sol, const IntegerLattice& lambda_prime)
{
	const RootSystemData& g = build(sol.type);
	FFunction f;
	f.g = &g;
	f.ell = sol.ell;
	IntegerLattice big = lattice_sum(sol.lambda1, sol.lambda2);
	f.dom = LatticeQuotient(big, lambda_prime);

	// q^{(mu,nu)} must not depend on the representatives: the kernel has to
	// pair into ell*Z against the whole domain lattice
	for (long i = 0; i < lambda_prime.basis().cols; ++i)
		for (long j = 0; j < big.basis().cols; ++j) {
			Rat r = g.killing_zz(lambda_prime.basis().col(i), big.basis().col(j));
			if (!is_integral(r / sol.ell))
				throw std::domain_error(
				    "coefficients depend on coset representatives: the kernel does not "
				    "centralize the domain lattice");
		}

	const AbelianGroup& D = f.dom.group();
	std::vector<AbelianGroup::Elem> s1g, s2g;
	for (long i = 0; i < D.order(); ++i) {
		AbelianGroup::Elem e = D.elem_at(i);
		std::vector<Int> v = f.dom.lift(e);
		if (sol.lambda1.contains(v)) s1g.push_back(e);
		if (sol.lambda2.contains(v)) s2g.push_back(e);
	}
	f.S1 = subgroup_closure(D, s1g);
	f.S2 = subgroup_closure(D, s2g);

	Pi1Map pi1 = make_pi1_map(g);
	Rat c = frac(1L, f.S2.size());
	f.val.assign(f.S1.size() * f.S2.size(), CycNum());
	for (long i = 0; i < f.S1.size(); ++i) {
		std::vector<Int> mu = f.dom.lift(f.S1.elems[i]);
		AbelianGroup::Elem mubar = pi1.project(mu);
		for (long j = 0; j < f.S2.size(); ++j) {
			std::vector<Int> nu = f.dom.lift(f.S2.elems[j]);
			AbelianGroup::Elem nubar = pi1.project(nu);
			CycNum v = q_pow(sol.ell, -g.killing_zz(mu, nu)) * sol.omega.omega(mubar, nubar);
			f.val[i * f.S2.size() + j] = c * v;
		}
	}
	return f;
}

namespace {

// characters of a subgroup via its basis decomposition
struct SubChars {
	const Subgroup* H;
	long count = 1;
	std::vector<long> pos; // element -> position used below

	explicit SubChars(const Subgroup& h) : H(&h)
	{
		for (long o : h.basis_orders) count *= o;
	}
	// exponent of chi_c at element y (as a zeta_E power), E = exponent of H
	long chi_exp(long cidx, const std::vector<long>& ycoords, long E) const
	{
		long e = 0;
		for (size_t i = 0; i < H->basis_orders.size(); ++i) {
			long ci = cidx % H->basis_orders[i];
			cidx /= H->basis_orders[i];
			e = mod_long(e + (E / H->basis_orders[i]) * ci % E * ycoords[i], E);
		}
		return e;
	}
};

CycNum collapse(const std::vector<Rat>& acc, long M)
{
	CycNum out;
	for (long i = 0; i < M; ++i) {
		if (acc[i] == 0) continue;
		out += acc[i] * CycNum::root_of_unity(M, i);
	}
	return out;
}

// One slot of the convolution family, checked through the exact character
// transform over the summed support group: conv(h_t1, h_t2) = delta * h_t1
// for all pairs is equivalent to each transformed column having at most one
// nonzero entry, equal to 1. The transform sums are accumulated in the
// zeta_M power basis (a root-of-unity factor is a cyclic shift there).
bool convolution_family_holds(const FFunction& f, bool sum_over_second)
{
	const Subgroup& S = sum_over_second ? f.S2 : f.S1;
	const Subgroup& T = sum_over_second ? f.S1 : f.S2;
	long ns = S.size(), nt = T.size();
	long E = 1;
	for (long o : S.basis_orders) E = lcm_long(E, o);
	long M = E;
	for (const CycNum& v : f.val) M = lcm_long(M, v.order());

	std::vector<std::vector<long>> coords(ns);
	for (long s = 0; s < ns; ++s) coords[s] = S.coords(S.elems[s]);

	// pre-lift every support value to the common order
	std::vector<RatVec> lifted(nt * ns);
	for (long t = 0; t < nt; ++t)
		for (long s = 0; s < ns; ++s) {
			const CycNum& v = sum_over_second ? f.at_support(t, s) : f.at_support(s, t);
			lifted[t * ns + s] = v.to_order(M).coeffs();
		}

	SubChars chars(S);
	CycNum one = CycNum::from_rat(1);
	for (long c = 0; c < chars.count; ++c) {
		std::vector<long> shift(ns);
		for (long s = 0; s < ns; ++s) shift[s] = chars.chi_exp(c, coords[s], E) * (M / E);
		long nonzero = 0;
		bool ok = true;
		for (long t = 0; t < nt && ok; ++t) {
			std::vector<Rat> acc(M, Rat(0));
			for (long s = 0; s < ns; ++s) {
				const RatVec& cf = lifted[t * ns + s];
				long k = shift[s];
				for (size_t i = 0; i < cf.size(); ++i) {
					if (cf[i] == 0) continue;
					acc[((long)i + k) % M] += cf[i];
				}
			}
			CycNum hat = collapse(acc, M);
			if (hat.is_zero()) continue;
			++nonzero;
			if (nonzero > 1 || hat != one) ok = false;
		}
		if (!ok) return false;
	}
	return true;
}

} // namespace

bool check_f_equations(const FFunction& f, long bound)
{
	const AbelianGroup& D = f.dom.group();
	if (f.dom.order() > bound)
		throw std::length_error("check_f_equations: lattice index exceeds the bound");
	const RootSystemData& g = *f.g;
	long n1 = f.S1.size(), n2 = f.S2.size();
	std::vector<std::vector<Int>> lift1(n1), lift2(n2);
	for (long s = 0; s < n1; ++s) lift1[s] = f.dom.lift(f.S1.elems[s]);
	for (long t = 0; t < n2; ++t) lift2[t] = f.dom.lift(f.S2.elems[t]);

	// translation family: f(mu + alpha, nu) = q^{-(nu, alpha)} f(mu, nu) and the mirror
	for (long i = 0; i < g.rank(); ++i) {
		std::vector<Int> alpha = g.simple_root(i);
		AbelianGroup::Elem abar = f.dom.project(alpha);
		std::vector<CycNum> qn(n2), qm(n1);
		for (long t = 0; t < n2; ++t) qn[t] = q_pow(f.ell, -g.killing_zz(lift2[t], alpha));
		for (long s = 0; s < n1; ++s) qm[s] = q_pow(f.ell, -g.killing_zz(lift1[s], alpha));
		for (long s = 0; s < n1; ++s) {
			long s2 = f.support_pos1(D.add(f.S1.elems[s], abar));
			if (s2 < 0) return false;
			for (long t = 0; t < n2; ++t) {
				long t2 = f.support_pos2(D.add(f.S2.elems[t], abar));
				if (t2 < 0) return false;
				if (f.at_support(s2, t) != qn[t] * f.at_support(s, t)) return false;
				if (f.at_support(s, t2) != qm[s] * f.at_support(s, t)) return false;
			}
		}
	}

	// convolution families in both slots
	if (!convolution_family_holds(f, true)) return false;
	if (!convolution_family_holds(f, false)) return false;

	// normalization sums
	CycNum one = CycNum::from_rat(1);
	for (long t = 0; t < n2; ++t) {
		CycNum s;
		for (long i = 0; i < n1; ++i) s += f.at_support(i, t);
		bool is_zero_class = f.S2.elems[t] == D.zero();
		if (s != (is_zero_class ? one : CycNum())) return false;
	}
	for (long s = 0; s < n1; ++s) {
		CycNum t;
		for (long j = 0; j < n2; ++j) t += f.at_support(s, j);
		bool is_zero_class = f.S1.elems[s] == D.zero();
		if (t != (is_zero_class ? one : CycNum())) return false;
	}
	return true;
}

GFunction fg_roundtrip(const FFunction& f)
{
	const RootSystemData& g = *f.g;
	Pi1Map pi1 = make_pi1_map(g);
	const AbelianGroup& P = pi1.grp;
	Int idxR = LatticeQuotient(root_lattice(g), f.dom.sub()).order();
	Rat scale = Rat(idxR);

	GFunction out{P, std::vector<CycNum>(P.order() * P.order())};
	std::vector<char> seen(P.order() * P.order(), 0);
	for (long s = 0; s < f.S1.size(); ++s) {
		std::vector<Int> mu = f.dom.lift(f.S1.elems[s]);
		long xi = P.index_of(pi1.project(mu));
		for (long t = 0; t < f.S2.size(); ++t) {
			std::vector<Int> nu = f.dom.lift(f.S2.elems[t]);
			long yi = P.index_of(pi1.project(nu));
			CycNum v = scale * (q_pow(f.ell, g.killing_zz(mu, nu)) * f.at_support(s, t));
			long pos = xi * P.order() + yi;
			if (seen[pos] && out.val[pos] != v)
				throw std::domain_error("transform undefined: value depends on the representative");
			seen[pos] = 1;
			out.val[pos] = v;
		}
	}
	// reconstruction reproduces f on its support
	Rat inv = 1 / scale;
	for (long s = 0; s < f.S1.size(); ++s) {
		std::vector<Int> mu = f.dom.lift(f.S1.elems[s]);
		for (long t = 0; t < f.S2.size(); ++t) {
			std::vector<Int> nu = f.dom.lift(f.S2.elems[t]);
			CycNum back = inv * (q_pow(f.ell, -g.killing_zz(mu, nu)) *
			                     out.val[P.index_of(pi1.project(mu)) * P.order() +
			                             P.index_of(pi1.project(nu))]);
			if (back != f.at_support(s, t))
				throw std::domain_error("transform undefined: reconstruction mismatch");
		}
	}
	return out;
}

} // namespace uqr
