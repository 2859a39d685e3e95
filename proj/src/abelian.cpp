#include "uqr/abelian.hpp"

#include <algorithm>
#include <set>

namespace uqr {

bool Subgroup::contains(const AbelianGroup::Elem& x) const
{
	return std::binary_search(elems.begin(), elems.end(), x,
	                          [&](const AbelianGroup::Elem& a, const AbelianGroup::Elem& b) {
		                          return G.index_of(a) < G.index_of(b);
	                          });
}

std::vector<long> Subgroup::coords(const AbelianGroup::Elem& x) const
{
	// brute force over basis coefficient tuples; subgroups here have order <= 16
	std::vector<long> c(basis.size(), 0);
	long total = 1;
	for (long o : basis_orders) total *= o;
	for (long it = 0; it < total; ++it) {
		long t = it;
		AbelianGroup::Elem acc = G.zero();
		for (size_t i = 0; i < basis.size(); ++i) {
			c[i] = t % basis_orders[i];
			t /= basis_orders[i];
			acc = G.add(acc, G.smul(c[i], basis[i]));
		}
		if (acc == x) return c;
	}
	throw std::domain_error("Subgroup::coords: element not in subgroup");
}

Subgroup subgroup_closure(const AbelianGroup& G, const std::vector<AbelianGroup::Elem>& gens)
{
	Subgroup H;
	H.G = G;
	std::set<long> seen;
	std::vector<AbelianGroup::Elem> work{G.zero()};
	seen.insert(G.index_of(G.zero()));
	for (size_t i = 0; i < work.size(); ++i)
		for (const auto& g : gens) {
			AbelianGroup::Elem nx = G.add(work[i], g);
			if (seen.insert(G.index_of(nx)).second) work.push_back(nx);
		}
	std::sort(work.begin(), work.end(),
	          [&](const auto& a, const auto& b) { return G.index_of(a) < G.index_of(b); });
	H.elems = std::move(work);

	// invariant-factor basis: present H as the quotient of the lattice spanned
	// by the generators together with diag(e) by diag(e) itself
	long r = G.rank();
	if (r == 0 || H.elems.size() == 1) return H;
	Mat M(r, (long)gens.size() + r);
	for (long j = 0; j < (long)gens.size(); ++j)
		for (long i = 0; i < r; ++i) M.at(i, j) = gens[j][i];
	for (long i = 0; i < r; ++i) M.at(i, (long)gens.size() + i) = G.factors[i];
	Mat B1 = hermite_cols(M);
	Mat E(r, r);
	for (long i = 0; i < r; ++i) E.at(i, i) = G.factors[i];
	Mat X = solve_int(B1, E);
	SmithForm f = smith(X);
	Mat lift = mat_mul(B1, f.Uinv);
	for (long i = 0; i < r; ++i) {
		long s = to_long(f.S.at(i, i));
		if (s <= 1) continue;
		AbelianGroup::Elem g(r);
		for (long k = 0; k < r; ++k) g[k] = mod_long(to_long(fmod(lift.at(k, i), Int(G.factors[k]))), G.factors[k]);
		H.basis.push_back(g);
		H.basis_orders.push_back(s);
	}
	return H;
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& G)
{
	// closure-based enumeration: grow each found subgroup by one element
	std::vector<Subgroup> out;
	std::set<std::vector<long>> seen; // element index sets
	std::vector<std::vector<AbelianGroup::Elem>> work;

	auto key = [&](const Subgroup& H) {
		std::vector<long> k;
		for (const auto& e : H.elems) k.push_back(G.index_of(e));
		return k;
	};

	Subgroup triv = subgroup_closure(G, {});
	seen.insert(key(triv));
	out.push_back(triv);
	work.push_back({});

	auto all = G.elements();
	for (size_t i = 0; i < out.size(); ++i) {
		std::vector<AbelianGroup::Elem> gens = work[i];
		for (const auto& x : all) {
			if (out[i].contains(x)) continue;
			gens.push_back(x);
			Subgroup H = subgroup_closure(G, gens);
			gens.pop_back();
			auto k = key(H);
			if (seen.insert(k).second) {
				out.push_back(H);
				work.push_back(gens);
				work.back().push_back(x);
			}
		}
	}
	std::sort(out.begin(), out.end(), [&](const Subgroup& a, const Subgroup& b) {
		if (a.size() != b.size()) return a.size() < b.size();
		return key(a) < key(b);
	});
	return out;
}

CycNum Character::eval(const AbelianGroup::Elem& x) const
{
	long E = G.exponent();
	if (E == 1) return CycNum::from_rat(1);
	long e = 0;
	for (size_t i = 0; i < G.factors.size(); ++i)
		e = mod_long(e + (E / G.factors[i]) * t[i] % E * x[i], E);
	return CycNum::root_of_unity(E, e);
}

CycNum Character::eval_inv(const AbelianGroup::Elem& x) const
{
	return eval(G.neg(x));
}

bool Character::is_trivial() const
{
	for (size_t i = 0; i < t.size(); ++i)
		if (mod_long(t[i], G.factors[i]) != 0) return false;
	return true;
}

Character Character::mul(const Character& o) const
{
	Character c{G, t};
	for (size_t i = 0; i < t.size(); ++i) c.t[i] = mod_long(t[i] + o.t[i], G.factors[i]);
	return c;
}

} // namespace uqr
