#include "uqr/equations.hpp"

#include <set>
#include <sstream>

namespace uqr {

bool GFunction::operator==(const GFunction& o) const
{
	if (!(G == o.G)) return false;
	for (size_t i = 0; i < val.size(); ++i)
		if (val[i] != o.val[i]) return false;
	return true;
}

std::string GFunction::key() const
{
	long E = std::max(G.exponent(), 1L);
	std::ostringstream os;
	for (const CycNum& v : val) {
		CycNum w = v.to_order(E);
		for (const Rat& c : w.coeffs()) os << c.get_str() << ",";
		os << ";";
	}
	return os.str();
}

CycNum Pairing::omega(const AbelianGroup::Elem& x, const AbelianGroup::Elem& y) const
{
	std::vector<long> cx = H1.coords(x), cy = H2.coords(y);
	CycNum w = CycNum::from_rat(1);
	for (size_t i = 0; i < cx.size(); ++i)
		for (size_t j = 0; j < cy.size(); ++j) {
			long ord = pair_order(i, j);
			if (ord == 1) continue;
			w *= CycNum::root_of_unity(ord, t[i][j] * cx[i] % ord * cy[j]);
		}
	return w;
}

CycNum Pairing::omega_inv(const AbelianGroup::Elem& x, const AbelianGroup::Elem& y) const
{
	return omega(H1.G.neg(x), y);
}

GFunction pairing_solution(const Pairing& p)
{
	const AbelianGroup& G = p.H1.G;
	GFunction g{G, std::vector<CycNum>(G.order() * G.order())};
	Rat inv_d = frac(1L, p.H1.size());
	for (const auto& x : p.H1.elems)
		for (const auto& y : p.H2.elems)
			g.at(x, y) = inv_d * p.omega(x, y);
	return g;
}

bool check_group_equations(const GFunction& g)
{
	const AbelianGroup& G = g.G;
	auto all = G.elements();
	CycNum one = CycNum::from_rat(1);

	for (const auto& x : all)
		for (const auto& y : all) {
			CycNum s1, s2;
			for (const auto& y1 : all) s1 += g.at(x, y1) * g.at(x, G.sub(y, y1));
			if (s1 != g.at(x, y)) return false;
			for (const auto& x1 : all) s2 += g.at(x1, y) * g.at(G.sub(x, x1), y);
			if (s2 != g.at(x, y)) return false;
		}
	CycNum n1, n2;
	for (const auto& y : all) n1 += g.at(G.zero(), y);
	for (const auto& x : all) n2 += g.at(x, G.zero());
	return n1 == one && n2 == one;
}

std::vector<Pairing> enumerate_pairings(const AbelianGroup& G, long bound)
{
	if (G.order() > bound) throw std::length_error("enumerate_pairings: group order exceeds bound");
	std::vector<Pairing> out;
	std::set<std::string> seen;
	auto subs = all_subgroups(G);
	for (const Subgroup& h1 : subs)
		for (const Subgroup& h2 : subs) {
			if (h1.size() != h2.size()) continue;
			// enumerate exponent tuples on basis pairs
			std::vector<long> lim;
			for (size_t i = 0; i < h1.basis.size(); ++i)
				for (size_t j = 0; j < h2.basis.size(); ++j)
					lim.push_back(gcd_long(h1.basis_orders[i], h2.basis_orders[j]));
			long total = 1;
			for (long L : lim) total *= L;
			for (long it = 0; it < total; ++it) {
				Pairing p{h1, h2, {}};
				p.t.assign(h1.basis.size(), std::vector<long>(h2.basis.size(), 0));
				long v = it;
				for (size_t i = 0; i < h1.basis.size(); ++i)
					for (size_t j = 0; j < h2.basis.size(); ++j) {
						long L = lim[i * h2.basis.size() + j];
						p.t[i][j] = v % L;
						v /= L;
					}
				GFunction g = pairing_solution(p);
				if (seen.insert(g.key()).second) out.push_back(p);
			}
		}
	return out;
}

Diamond cyclic_diamond(long N, long l, long m)
{
	Diamond dia;
	dia.G.factors = N > 1 ? std::vector<long>{N} : std::vector<long>{};
	dia.A = dia.G;
	long na = dia.A.order();
	dia.phi1.reserve(na);
	dia.phi2.reserve(na);
	dia.inB.assign(na, 0);
	dia.inC.assign(na, 0);
	for (long z = 0; z < na; ++z) {
		Character chi{dia.G, {}};
		AbelianGroup::Elem shift = dia.G.zero();
		if (N > 1) {
			chi.t = {mod_long(z * m, N)};
			shift = {mod_long(z * l, N)};
		}
		dia.inB[z] = chi.is_trivial();
		dia.inC[z] = shift == dia.G.zero();
		dia.phi1.push_back(chi);
		dia.phi2.push_back(shift);
	}
	bool vacuous = N == 1 || (mod_long(m, N) == 0 && mod_long(l, N) == 0);
	dia.excluded.assign(na, vacuous ? 1 : 0);
	dia.excluded[0] = 1;
	return dia;
}

namespace {

bool diamond_eqs(const GFunction& g, const Diamond& dia, bool scaling_only)
{
	const AbelianGroup& G = g.G;
	auto all = G.elements();
	CycNum zero;
	for (long ai = 0; ai < dia.A.order(); ++ai) {
		if (dia.excluded[ai]) continue;
		const Character& chi = dia.phi1[ai];
		const AbelianGroup::Elem& sh = dia.phi2[ai];

		CycNum s3, s4;
		for (const auto& y : all) s3 += chi.eval_inv(y) * g.at(sh, y);
		if (!s3.is_zero()) return false;
		for (const auto& x : all) s4 += chi.eval_inv(x) * g.at(x, sh);
		if (!s4.is_zero()) return false;

		if (scaling_only) continue;

		for (const auto& x : all)
			for (const auto& y : all) {
				CycNum s1, s2;
				for (const auto& y1 : all)
					s1 += chi.eval(y1) * g.at(x, y1) * g.at(G.add(x, sh), G.sub(y, y1));
				if (!s1.is_zero()) return false;
				for (const auto& x1 : all)
					s2 += chi.eval(x1) * g.at(x1, y) * g.at(G.sub(x, x1), G.add(y, sh));
				if (!s2.is_zero()) return false;
			}
	}
	return true;
}

} // namespace

bool check_diamond_equations(const GFunction& g, const Diamond& dia)
{
	return diamond_eqs(g, dia, false);
}

bool scaling_equations_only(const GFunction& g, const Diamond& dia)
{
	return diamond_eqs(g, dia, true);
}

bool gcd_criterion(long N, long d, long k, long l, long m)
{
	if (d <= 0 || N % d != 0) throw std::domain_error("gcd_criterion: d must divide N");
	if (k < 1 || k > d) throw std::domain_error("gcd_criterion: need 1 <= k <= d");
	if (m % N == 0 && l % N == 0) return true;
	long g1 = gcd_long(N, d * l);
	long g2 = gcd_long(g1, k * l - (N / d) * m);
	return g2 == 1;
}

} // namespace uqr
