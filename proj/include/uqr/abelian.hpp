#pragma once

#include "uqr/cyclo.hpp"
#include "uqr/intmat.hpp"

namespace uqr {

/// Finite abelian group presented as Z_{e_1} x ... x Z_{e_r}; the e_i are the
/// invariant factors (each > 1, e_i | e_{i+1}) except where a presentation
/// fixes another basis (e.g. Z_2 x Z_2 for the D_n spin classes). Elements are
/// coefficient tuples reduced mod the factors.
struct AbelianGroup {
	std::vector<long> factors;

	using Elem = std::vector<long>;

	long rank() const { return (long)factors.size(); }
	long order() const
	{
		long n = 1;
		for (long e : factors) n *= e;
		return n;
	}
	long exponent() const
	{
		long e = 1;
		for (long f : factors) e = lcm_long(e, f);
		return e;
	}

	Elem zero() const { return Elem(factors.size(), 0); }
	Elem reduce(Elem x) const
	{
		for (size_t i = 0; i < factors.size(); ++i) x[i] = mod_long(x[i], factors[i]);
		return x;
	}
	Elem add(const Elem& a, const Elem& b) const
	{
		Elem c(factors.size());
		for (size_t i = 0; i < factors.size(); ++i) c[i] = mod_long(a[i] + b[i], factors[i]);
		return c;
	}
	Elem sub(const Elem& a, const Elem& b) const
	{
		Elem c(factors.size());
		for (size_t i = 0; i < factors.size(); ++i) c[i] = mod_long(a[i] - b[i], factors[i]);
		return c;
	}
	Elem neg(const Elem& a) const { return sub(zero(), a); }
	Elem smul(long k, const Elem& a) const
	{
		Elem c(factors.size());
		for (size_t i = 0; i < factors.size(); ++i)
			c[i] = mod_long(k % factors[i] * a[i], factors[i]);
		return c;
	}

	long index_of(const Elem& x) const
	{
		long idx = 0;
		for (size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + x[i];
		return idx;
	}
	Elem elem_at(long idx) const
	{
		Elem x(factors.size());
		for (long i = (long)factors.size() - 1; i >= 0; --i) {
			x[i] = idx % factors[i];
			idx /= factors[i];
		}
		return x;
	}
	std::vector<Elem> elements() const
	{
		std::vector<Elem> all;
		all.reserve(order());
		for (long i = 0; i < order(); ++i) all.push_back(elem_at(i));
		return all;
	}
	long elem_order(const Elem& x) const
	{
		long o = 1;
		for (size_t i = 0; i < factors.size(); ++i)
			o = lcm_long(o, factors[i] / gcd_long(factors[i], x[i]));
		return o;
	}

	bool operator==(const AbelianGroup& o) const { return factors == o.factors; }
};

/// Subgroup of an AbelianGroup: element set plus a basis (independent
/// generators with their orders), computed via Smith reduction.
struct Subgroup {
	AbelianGroup G;
	std::vector<AbelianGroup::Elem> elems;          // sorted by index_of
	std::vector<AbelianGroup::Elem> basis;          // independent generators
	std::vector<long> basis_orders;

	long size() const { return (long)elems.size(); }
	bool contains(const AbelianGroup::Elem& x) const;
	/// coefficients of x in the basis; throws if x is not in the subgroup
	std::vector<long> coords(const AbelianGroup::Elem& x) const;
};

Subgroup subgroup_closure(const AbelianGroup& G, const std::vector<AbelianGroup::Elem>& gens);
std::vector<Subgroup> all_subgroups(const AbelianGroup& G);

/// Character of G: chi(x) = prod_i zeta_{e_i}^{t_i x_i}.
struct Character {
	AbelianGroup G;
	std::vector<long> t;

	CycNum eval(const AbelianGroup::Elem& x) const;
	CycNum eval_inv(const AbelianGroup::Elem& x) const;
	bool is_trivial() const;
	Character mul(const Character& o) const;
};

} // namespace uqr
