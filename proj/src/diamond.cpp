#include "uqr/diamond.hpp"

namespace uqr {

AbelianGroup::Elem Pi1Map::project(const std::vector<Int>& v) const
{
	if (grp.rank() == 0) return {};
	return lookup[q.group().index_of(q.project(v))];
}

std::vector<Int> Pi1Map::rep(const AbelianGroup::Elem& x) const
{
	std::vector<Int> v(g->rank(), 0);
	for (size_t i = 0; i < gen_reps.size(); ++i)
		for (long k = 0; k < g->rank(); ++k) v[k] += Int(x[i]) * gen_reps[i][k];
	return v;
}

Pi1Map make_pi1_map(const RootSystemData& g)
{
	Pi1Map m;
	m.g = &g;
	m.q = LatticeQuotient(weight_lattice(g), root_lattice(g));
	m.grp = g.pi1;
	for (long idx : g.pi1_gen_weight) {
		std::vector<Int> e(g.rank(), 0);
		e[idx - 1] = 1;
		m.gen_reps.push_back(e);
	}
	long n = m.grp.order();
	if (m.q.order() != n) throw std::logic_error("pi1 presentation order mismatch");
	m.lookup.assign(n, {});
	std::vector<char> hit(n, 0);
	for (long i = 0; i < n; ++i) {
		AbelianGroup::Elem x = m.grp.elem_at(i);
		long raw = m.q.group().index_of(m.q.project(m.rep(x)));
		if (hit[raw]) throw std::logic_error("designated weights do not generate pi1");
		hit[raw] = 1;
		m.lookup[raw] = x;
	}
	return m;
}

DiamondSpec build_diamond(const RootSystemData& g, long ell, const IntegerLattice& lambda_prime)
{
	DiamondSpec spec;
	spec.g = &g;
	spec.ell = ell;
	spec.lambda_prime = lambda_prime;

	IntegerLattice lw = weight_lattice(g);
	IntegerLattice lr = root_lattice(g);
	spec.latA = cent_q(g, lw, lr, ell);
	spec.latB = cent_q(g, lw, lw, ell);
	spec.latC = intersect(spec.latA, lr);
	spec.latD = intersect(spec.latB, lr);

	// kernel assumption: 2 Lambda_R^(ell) <= Lambda' <= Cent^q(Lambda_W) cap Lambda_R
	if (!lambda_prime.contains_lattice(lusztig_kernel(g, ell)))
		throw std::domain_error("kernel too small: 2 Lambda_R^(ell) is not contained in Lambda'");
	if (!spec.latD.contains_lattice(lambda_prime))
		throw std::domain_error("kernel too large: Lambda' is not contained in Cent^q(Lambda_W) cap Lambda_R");

	spec.pi1 = make_pi1_map(g);
	spec.qA = LatticeQuotient(spec.latA, lambda_prime);

	const AbelianGroup& A = spec.qA.group();
	const AbelianGroup& G = spec.pi1.grp;
	spec.eq.G = G;
	spec.eq.A = A;
	long na = A.order();
	spec.eq.inB.assign(na, 0);
	spec.eq.inC.assign(na, 0);
	spec.eq.excluded.assign(na, 0);
	spec.eq.excluded[0] = 1;

	for (long ai = 0; ai < na; ++ai) {
		AbelianGroup::Elem a = A.elem_at(ai);
		std::vector<Int> lift = spec.qA.lift(a);

		Character chi{G, std::vector<long>(G.rank(), 0)};
		for (long i = 0; i < G.rank(); ++i) {
			// chi(gen_i) = q^{(lift, gen_i)} has order dividing the generator
			// order; store the reduced exponent and insist it is exact
			Rat r = g.killing_zz(lift, spec.pi1.gen_reps[i]);
			Rat t = r * Rat(G.factors[i]) / Rat(ell);
			if (!is_integral(t))
				throw std::logic_error("phi1 value is not a root of unity of the expected order");
			chi.t[i] = mod_long(to_long(num(t)), G.factors[i]);
		}
		AbelianGroup::Elem shift = spec.pi1.project(lift);

		bool inB = spec.latB.contains(lift);
		bool inC = spec.latC.contains(lift);
		if (inB != chi.is_trivial()) throw std::logic_error("phi1 kernel mismatch");
		if (inC != (shift == G.zero())) throw std::logic_error("phi2 kernel mismatch");
		spec.eq.inB[ai] = inB;
		spec.eq.inC[ai] = inC;
		spec.eq.phi1.push_back(chi);
		spec.eq.phi2.push_back(shift);
	}

	auto sub_of = [&](const IntegerLattice& lat) {
		std::vector<AbelianGroup::Elem> gens;
		for (long j = 0; j < lat.basis().cols; ++j)
			gens.push_back(spec.qA.project(lat.basis().col(j)));
		return subgroup_closure(A, gens);
	};
	spec.subB = sub_of(spec.latB);
	spec.subC = sub_of(spec.latC);
	spec.subD = sub_of(spec.latD);

	// the kernels are exactly the subgroups, so phi1 is injective on A/B and
	// phi2 on A/C
	for (long ai = 0; ai < na; ++ai) {
		AbelianGroup::Elem a = A.elem_at(ai);
		if (spec.eq.inB[ai] != (spec.subB.contains(a) ? 1 : 0))
			throw std::logic_error("B subgroup mismatch");
		if (spec.eq.inC[ai] != (spec.subC.contains(a) ? 1 : 0))
			throw std::logic_error("C subgroup mismatch");
	}

	if (G.rank() <= 1 && A.order() == G.order() && A.rank() <= 1) {
		long N = G.order();
		long m = 0, l = 0;
		if (N > 1 && A.rank() == 1) {
			long gi = A.index_of({1});
			if (!spec.eq.phi1[gi].t.empty()) m = spec.eq.phi1[gi].t[0];
			if (!spec.eq.phi2[gi].empty()) l = spec.eq.phi2[gi][0];
		}
		spec.cyclic_mod = std::array<long, 3>{N, m, l};
	}
	return spec;
}

CyclicParams cyclic_params(const RootSystemData& g, long ell)
{
	if (g.pi1.rank() > 1)
		throw std::domain_error("cyclic_params: fundamental group is not cyclic");
	long N = g.pi1.order();
	long dn = g.d[g.rank() - 1];
	long gd = gcd_long(ell, dn);
	Rat m = Rat(N) * g.gram_weights.at(g.rank() - 1, g.rank() - 1) / Rat(gd);
	if (!is_integral(m)) throw std::logic_error("cyclic_params: m is not integral");
	return {N, to_long(num(m)), ell / gd};
}

DiamondCase classify_case(long N, long m, long l)
{
	bool ndm = N == 1 || mod_long(m, N) == 0;
	bool ndl = N == 1 || mod_long(l, N) == 0;
	if (ndm && ndl) return DiamondCase::I;
	if (ndm) return DiamondCase::II;
	if (gcd_long(m, N) == 1) return DiamondCase::III;
	throw std::domain_error("diamond parameters fit none of the three case shapes");
}

DiamondCase classify_case(const RootSystemData& g, long ell)
{
	CyclicParams p = cyclic_params(g, ell);
	return classify_case(p.N, p.m_n, p.ell_n);
}

} // namespace uqr
