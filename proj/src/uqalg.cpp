#include "uqr/uqalg.hpp"

namespace uqr {

UqSl2::UqSl2(long ell, const IntegerLattice& lambda, const IntegerLattice& lambda_prime)
    : ell_(ell)
{
	const RootSystemData& g = build(parse_type('A', 1));
	if (&lambda.ambient() != &g || &lambda_prime.ambient() != &g)
		throw std::invalid_argument("UqSl2: lattices must live over A1");
	if (ell <= 2) throw std::domain_error("ell must exceed 2");
	ell_alpha_ = ell / gcd_long(ell, 2);
	q_ = q_pow(ell, 1);
	qinv_ = q_pow(ell, -1);
	q_quot_ = LatticeQuotient(lambda, lambda_prime);
	grp_ = q_quot_.group();
	pi1_ = make_pi1_map(g);

	std::vector<Int> alpha = g.simple_root(0);
	std::vector<Int> nalpha{-alpha[0]};
	alpha_idx_ = grp_.index_of(q_quot_.project(alpha));
	alpha_neg_idx_ = grp_.index_of(q_quot_.project(nalpha));

	long n = grp_.order();
	lifts_.resize(n);
	for (long i = 0; i < n; ++i) lifts_[i] = q_quot_.lift(grp_.elem_at(i));
	qpow_alpha_.resize(n);
	for (long i = 0; i < n; ++i) qpow_alpha_[i] = q_pow(ell, g.killing_zz(lifts_[i], alpha));
	qform_.assign(n, std::vector<CycNum>(n));
	for (long i = 0; i < n; ++i)
		for (long j = 0; j < n; ++j)
			qform_[i][j] = q_pow(ell, g.killing_zz(lifts_[i], lifts_[j]));
}

Int UqSl2::dimension() const
{
	return q_quot_.order() * Int(ell_alpha_) * Int(ell_alpha_);
}

void UqSl2::accum(Elem& into, const Mono& m, const CycNum& c)
{
	if (c.is_zero()) return;
	auto it = into.find(m);
	if (it == into.end()) into.emplace(m, c);
	else {
		it->second += c;
		if (it->second.is_zero()) into.erase(it);
	}
}

UqSl2::Elem UqSl2::one() const
{
	return Elem{{Mono{0, grp_.index_of(grp_.zero()), 0}, CycNum::from_rat(1)}};
}

UqSl2::Elem UqSl2::E() const
{
	return Elem{{Mono{1, grp_.index_of(grp_.zero()), 0}, CycNum::from_rat(1)}};
}

UqSl2::Elem UqSl2::F() const
{
	return Elem{{Mono{0, grp_.index_of(grp_.zero()), 1}, CycNum::from_rat(1)}};
}

UqSl2::Elem UqSl2::K(const AbelianGroup::Elem& mu) const
{
	return Elem{{Mono{0, grp_.index_of(grp_.reduce(mu)), 0}, CycNum::from_rat(1)}};
}

UqSl2::Elem UqSl2::K_class_of(const std::vector<Int>& v) const
{
	return K(q_quot_.project(v));
}

std::vector<UqSl2::Elem> UqSl2::generators() const
{
	std::vector<Elem> gens{E(), F()};
	for (long i = 0; i < grp_.rank(); ++i) {
		AbelianGroup::Elem e = grp_.zero();
		e[i] = 1;
		gens.push_back(K(e));
	}
	return gens;
}

const UqSl2::Elem& UqSl2::fe_table(int c, int a) const
{
	auto key = std::make_pair(c, a);
	auto it = fe_cache_.find(key);
	if (it != fe_cache_.end()) return it->second;

	long zero = grp_.index_of(grp_.zero());
	Elem result;
	if (c == 0 || a == 0) {
		result = Elem{{Mono{a, zero, c}, CycNum::from_rat(1)}};
	} else if (c == 1 && a == 1) {
		// F E = E F - (K_alpha - K_alpha^{-1})/(q - q^{-1})
		CycNum inv = (q_ - qinv_).inv();
		accum(result, Mono{1, zero, 1}, CycNum::from_rat(1));
		accum(result, Mono{0, alpha_idx_, 0}, -inv);
		accum(result, Mono{0, alpha_neg_idx_, 0}, inv);
	} else if (a == 1) {
		// F^c E = F^{c-1} (F E)
		const Elem& fe11 = fe_table(1, 1);
		Mono fpow{0, zero, c - 1};
		for (const auto& [m, coef] : fe11) {
			Elem part = mono_mul(fpow, coef, m);
			for (const auto& [pm, pc] : part) accum(result, pm, pc);
		}
	} else {
		// F^c E^a = (F^c E) E^{a-1}
		const Elem& head = fe_table(c, 1);
		Mono epow{a - 1, zero, 0};
		for (const auto& [m, coef] : head) {
			Elem part = mono_mul(m, coef, epow);
			for (const auto& [pm, pc] : part) accum(result, pm, pc);
		}
	}
	return fe_cache_.emplace(key, std::move(result)).first->second;
}

UqSl2::Elem UqSl2::mono_mul(const Mono& m1, const CycNum& coef, const Mono& m2) const
{
	Elem out;
	if (coef.is_zero()) return out;
	const Elem& mid = fe_table(m1.c, m2.a);
	for (const auto& [t, tc] : mid) {
		int a = m1.a + t.a;
		int c = t.c + m2.c;
		if (a >= ell_alpha_ || c >= ell_alpha_) continue; // E^{ell_a} = F^{ell_a} = 0
		// move K_{m1.k} through E^{t.a} and K_{m2.k} through F^{t.c}
		CycNum factor = tc * coef;
		for (int r = 0; r < t.a; ++r) factor *= qpow_alpha_[m1.k];
		for (int r = 0; r < t.c; ++r) factor *= qpow_alpha_[m2.k];
		long k = grp_.index_of(grp_.add(grp_.add(grp_.elem_at(m1.k), grp_.elem_at(t.k)),
		                                grp_.elem_at(m2.k)));
		accum(out, Mono{a, k, c}, factor);
	}
	return out;
}

UqSl2::Elem UqSl2::mul(const Elem& x, const Elem& y) const
{
	Elem out;
	for (const auto& [m1, c1] : x)
		for (const auto& [m2, c2] : y) {
			Elem part = mono_mul(m1, c1 * c2, m2);
			for (const auto& [pm, pc] : part) accum(out, pm, pc);
		}
	return out;
}

UqSl2::Elem UqSl2::add(const Elem& x, const Elem& y) const
{
	Elem out = x;
	for (const auto& [m, c] : y) accum(out, m, c);
	return out;
}

UqSl2::Elem UqSl2::scale(const CycNum& c, const Elem& x) const
{
	Elem out;
	for (const auto& [m, v] : x) accum(out, m, c * v);
	return out;
}

UqSl2::Elem2 UqSl2::tensor(const Elem& x, const Elem& y) const
{
	Elem2 out;
	for (const auto& [m1, c1] : x)
		for (const auto& [m2, c2] : y) {
			CycNum c = c1 * c2;
			if (!c.is_zero()) out[{m1, m2}] = c;
		}
	return out;
}

UqSl2::Elem2 UqSl2::mul2(const Elem2& x, const Elem2& y) const
{
	Elem2 out;
	for (const auto& [mx, cx] : x)
		for (const auto& [my, cy] : y) {
			Elem legA = mono_mul(mx.first, cx * cy, my.first);
			if (legA.empty()) continue;
			Elem legB = mono_mul(mx.second, CycNum::from_rat(1), my.second);
			for (const auto& [ma, ca] : legA)
				for (const auto& [mb, cb] : legB) {
					CycNum c = ca * cb;
					if (c.is_zero()) continue;
					auto key = std::make_pair(ma, mb);
					auto it = out.find(key);
					if (it == out.end()) out.emplace(key, c);
					else {
						it->second += c;
						if (it->second.is_zero()) out.erase(it);
					}
				}
		}
	return out;
}

UqSl2::Elem2 UqSl2::swap_legs(const Elem2& x) const
{
	Elem2 out;
	for (const auto& [m, c] : x) out[{m.second, m.first}] = c;
	return out;
}

UqSl2::Elem3 UqSl2::mul3(const Elem3& x, const Elem3& y) const
{
	Elem3 out;
	for (const auto& [mx, cx] : x)
		for (const auto& [my, cy] : y) {
			Elem l0 = mono_mul(mx[0], cx * cy, my[0]);
			if (l0.empty()) continue;
			Elem l1 = mono_mul(mx[1], CycNum::from_rat(1), my[1]);
			if (l1.empty()) continue;
			Elem l2 = mono_mul(mx[2], CycNum::from_rat(1), my[2]);
			for (const auto& [a, ca] : l0)
				for (const auto& [b, cb] : l1)
					for (const auto& [c, cc] : l2) {
						CycNum v = ca * cb * cc;
						if (v.is_zero()) continue;
						Mono3 key{a, b, c};
						auto it = out.find(key);
						if (it == out.end()) out.emplace(key, v);
						else {
							it->second += v;
							if (it->second.is_zero()) out.erase(it);
						}
					}
		}
	return out;
}

UqSl2::Elem3 UqSl2::embed(const Elem2& x, int leg1, int leg2) const
{
	Mono id{0, grp_.index_of(grp_.zero()), 0};
	Elem3 out;
	for (const auto& [m, c] : x) {
		Mono3 key{id, id, id};
		key[leg1] = m.first;
		key[leg2] = m.second;
		out[key] = c;
	}
	return out;
}

namespace {

UqSl2::Elem2 add2(const UqSl2::Elem2& x, const UqSl2::Elem2& y)
{
	UqSl2::Elem2 out = x;
	for (const auto& [m, c] : y) {
		auto it = out.find(m);
		if (it == out.end()) out.emplace(m, c);
		else {
			it->second += c;
			if (it->second.is_zero()) out.erase(it);
		}
	}
	return out;
}

} // namespace

UqSl2::Elem2 UqSl2::coproduct(const Elem& x) const
{
	// Delta(E) = E x K_alpha + 1 x E, Delta(F) = F x 1 + K_alpha^{-1} x F,
	// Delta(K) = K x K; extended as an algebra map over the normal form
	Elem2 dE1 = add2(tensor(E(), K(grp_.elem_at(alpha_idx_))), tensor(one(), E()));
	Elem2 dF1 = add2(tensor(F(), one()), tensor(K(grp_.elem_at(alpha_neg_idx_)), F()));
	Elem2 out;
	for (const auto& [m, c] : x) {
		Elem2 term = tensor(K(grp_.elem_at(m.k)), K(grp_.elem_at(m.k)));
		Elem2 dEpow = tensor(one(), one());
		for (int r = 0; r < m.a; ++r) dEpow = mul2(dEpow, dE1);
		Elem2 dFpow = tensor(one(), one());
		for (int r = 0; r < m.c; ++r) dFpow = mul2(dFpow, dF1);
		Elem2 full = mul2(mul2(dEpow, term), dFpow);
		for (const auto& [mm, cc] : full) {
			CycNum v = cc * c;
			if (v.is_zero()) continue;
			auto it = out.find(mm);
			if (it == out.end()) out.emplace(mm, v);
			else {
				it->second += v;
				if (it->second.is_zero()) out.erase(it);
			}
		}
	}
	return out;
}

UqSl2::Elem3 UqSl2::coproduct_leg(const Elem2& x, int leg) const
{
	Elem3 out;
	for (const auto& [m, c] : x) {
		Elem single{{leg == 0 ? m.first : m.second, CycNum::from_rat(1)}};
		Elem2 d = coproduct(single);
		for (const auto& [dm, dc] : d) {
			Mono3 key;
			if (leg == 0) key = {dm.first, dm.second, m.second};
			else key = {m.first, dm.first, dm.second};
			CycNum v = dc * c;
			if (v.is_zero()) continue;
			auto it = out.find(key);
			if (it == out.end()) out.emplace(key, v);
			else {
				it->second += v;
				if (it->second.is_zero()) out.erase(it);
			}
		}
	}
	return out;
}

CycNum UqSl2::counit(const Elem& x) const
{
	CycNum e;
	for (const auto& [m, c] : x)
		if (m.a == 0 && m.c == 0) e += c;
	return e;
}

UqSl2::Elem UqSl2::antipode(const Elem& x) const
{
	// S(E) = -E K_alpha^{-1}, S(F) = -K_alpha F, S(K) = K^{-1}, antihomomorphism
	Elem sE = scale(-CycNum::from_rat(1), mul(E(), K(grp_.elem_at(alpha_neg_idx_))));
	Elem sF = scale(-CycNum::from_rat(1), mul(K(grp_.elem_at(alpha_idx_)), F()));
	Elem out;
	for (const auto& [m, c] : x) {
		Elem term = one();
		for (int r = 0; r < m.c; ++r) term = mul(term, sF);
		term = mul(term, K(grp_.neg(grp_.elem_at(m.k))));
		for (int r = 0; r < m.a; ++r) term = mul(term, sE);
		for (const auto& [tm, tc] : term) accum(out, tm, tc * c);
	}
	return out;
}

UqSl2::Elem2 UqSl2::theta() const
{
	Elem2 out;
	long zero = grp_.index_of(grp_.zero());
	for (long k = 0; k < ell_alpha_; ++k) {
		CycNum coef = CycNum::from_rat(k % 2 ? -1 : 1) * q_pow(ell_, frac(-k * (k - 1), 2));
		CycNum pw = CycNum::from_rat(1);
		for (long r = 0; r < k; ++r) pw *= q_ - qinv_;
		coef = coef * pw / qfact(ell_, k);
		out[{Mono{(int)k, zero, 0}, Mono{0, zero, (int)k}}] = coef;
	}
	return out;
}

UqSl2::Elem2 UqSl2::theta_bar() const
{
	Elem2 out;
	long zero = grp_.index_of(grp_.zero());
	for (long k = 0; k < ell_alpha_; ++k) {
		CycNum coef = q_pow(ell_, frac(k * (k - 1), 2));
		CycNum pw = CycNum::from_rat(1);
		for (long r = 0; r < k; ++r) pw *= q_ - qinv_;
		coef = coef * pw / qfact(ell_, k);
		out[{Mono{(int)k, zero, 0}, Mono{0, zero, (int)k}}] = coef;
	}
	return out;
}

UqSl2::Elem2 UqSl2::assemble_R0(const R0Solution& sol) const
{
	long n = grp_.order();
	// support classes of the two solution lattices inside Lambda/Lambda'
	std::vector<long> s1, s2;
	for (long i = 0; i < n; ++i) {
		if (sol.lambda1.contains(lifts_[i])) s1.push_back(i);
		if (sol.lambda2.contains(lifts_[i])) s2.push_back(i);
	}
	Rat c = frac(1L, (long)s2.size());
	Elem2 out;
	for (long i : s1)
		for (long j : s2) {
			AbelianGroup::Elem mubar = pi1_.project(lifts_[i]);
			AbelianGroup::Elem nubar = pi1_.project(lifts_[j]);
			CycNum v = c * (qform_[i][j].inv() * sol.omega.omega(mubar, nubar));
			if (v.is_zero()) continue;
			out[{Mono{0, i, 0}, Mono{0, j, 0}}] = v;
		}
	return out;
}

UqSl2::Elem2 UqSl2::assemble_R(const R0Solution& sol) const
{
	return mul2(assemble_R0(sol), theta_bar());
}

UqSl2::Elem2 UqSl2::assemble_R_inverse(const R0Solution& sol) const
{
	long n = grp_.order();
	std::vector<long> s1, s2;
	for (long i = 0; i < n; ++i) {
		if (sol.lambda1.contains(lifts_[i])) s1.push_back(i);
		if (sol.lambda2.contains(lifts_[i])) s2.push_back(i);
	}
	Rat c = frac(1L, (long)s2.size());
	Elem2 conj;
	for (long i : s1)
		for (long j : s2) {
			AbelianGroup::Elem mubar = pi1_.project(lifts_[i]);
			AbelianGroup::Elem nubar = pi1_.project(lifts_[j]);
			CycNum v = c * (qform_[i][j] * sol.omega.omega_inv(mubar, nubar));
			if (v.is_zero()) continue;
			conj[{Mono{0, i, 0}, Mono{0, j, 0}}] = v;
		}
	return mul2(theta(), conj);
}

UqSl2::Report UqSl2::verify_quasitriangular(const Elem2& R, const Elem2& Rinv) const
{
	Report rep;
	Elem2 unit = tensor(one(), one());
	rep.invertible = mul2(R, Rinv) == unit && mul2(Rinv, R) == unit;

	rep.intertwines = true;
	for (const Elem& h : generators()) {
		Elem2 d = coproduct(h);
		if (mul2(R, d) != mul2(swap_legs(d), R)) {
			rep.intertwines = false;
			break;
		}
	}
	rep.coproduct_first = coproduct_leg(R, 0) == mul3(embed(R, 0, 2), embed(R, 1, 2));
	rep.coproduct_second = coproduct_leg(R, 1) == mul3(embed(R, 0, 2), embed(R, 0, 1));
	return rep;
}

UqSl2::Report UqSl2::verify_solution(const R0Solution& sol) const
{
	return verify_quasitriangular(assemble_R(sol), assemble_R_inverse(sol));
}

UqSl2 algebra_for(const R0Solution& sol)
{
	const RootSystemData& g = build(sol.type);
	return UqSl2(sol.ell, lattice_sum(sol.lambda1, sol.lambda2),
	             ell_lattice_square(g, LatticeBase::roots, sol.ell));
}

} // namespace uqr
