#include "uqr/rootdata.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace uqr {

std::string RootSystemType::str() const
{
	std::ostringstream os;
	os << (char)family << rank;
	return os.str();
}

RootSystemType parse_type(char family, long rank)
{
	Family f;
	switch (family) {
	case 'A': f = Family::A; break;
	case 'B': f = Family::B; break;
	case 'C': f = Family::C; break;
	case 'D': f = Family::D; break;
	case 'E': f = Family::E; break;
	case 'F': f = Family::F; break;
	case 'G': f = Family::G; break;
	default: throw std::domain_error("unknown family");
	}
	bool ok = false;
	switch (f) {
	case Family::A: ok = rank >= 1; break;
	case Family::B: ok = rank >= 2; break;
	case Family::C: ok = rank >= 3; break;
	case Family::D: ok = rank >= 4; break;
	case Family::E: ok = rank >= 6 && rank <= 8; break;
	case Family::F: ok = rank == 4; break;
	case Family::G: ok = rank == 2; break;
	}
	if (!ok) throw std::domain_error("rank out of range for family");
	return {f, rank};
}

namespace {

Mat cartan_from_symmetrized(const std::vector<std::vector<long>>& ct, const std::vector<long>& d)
{
	long n = (long)ct.size();
	Mat A(n, n);
	for (long i = 0; i < n; ++i)
		for (long j = 0; j < n; ++j) {
			if (ct[i][j] % d[i]) throw std::logic_error("symmetrized Cartan not divisible by d");
			A.at(i, j) = ct[i][j] / d[i];
		}
	return A;
}

RatMat ratmat(const std::vector<std::vector<Rat>>& rows)
{
	RatMat m((long)rows.size(), (long)rows[0].size());
	for (long i = 0; i < m.rows; ++i)
		for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
	return m;
}

// closed-form weight_to_root entries for the classical families
RatMat classical_weight_to_root(Family f, long n)
{
	RatMat W(n, n);
	auto mn = [](long a, long b) { return std::min(a, b); };
	for (long i = 1; i <= n; ++i)
		for (long j = 1; j <= n; ++j) {
			Rat v;
			switch (f) {
			case Family::A:
				v = i <= j ? frac(i * (n - j + 1), n + 1) : frac(j * (n - i + 1), n + 1);
				break;
			case Family::B:
				v = j < n ? Rat(mn(i, j)) : frac(i, 2);
				break;
			case Family::C:
				v = i < n ? Rat(mn(i, j)) : (j < n ? frac(j, 2) : frac(n, 2));
				break;
			case Family::D:
				if (i <= n - 2 && j <= n - 2) v = Rat(mn(i, j));
				else if (i <= n - 2) v = frac(i, 2);
				else if (j <= n - 2) v = frac(j, 2);
				else if (i == j) v = frac(n, 4);
				else v = frac(n - 2, 4);
				break;
			default: throw std::logic_error("not a classical family");
			}
			W.at(i - 1, j - 1) = v;
		}
	return W;
}

Mat classical_cartan(Family f, long n)
{
	Mat A(n, n);
	for (long i = 0; i < n; ++i) A.at(i, i) = 2;
	auto link = [&](long i, long j, long aij, long aji) {
		A.at(i, j) = aij;
		A.at(j, i) = aji;
	};
	switch (f) {
	case Family::A:
		for (long i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
		break;
	case Family::B: // alpha_1..alpha_{n-1} long, alpha_n short
		for (long i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
		link(n - 2, n - 1, -1, -2);
		break;
	case Family::C: // alpha_1..alpha_{n-1} short, alpha_n long
		for (long i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
		link(n - 2, n - 1, -2, -1);
		break;
	case Family::D:
		for (long i = 0; i + 2 < n - 1; ++i) link(i, i + 1, -1, -1);
		link(n - 3, n - 2, -1, -1);
		link(n - 3, n - 1, -1, -1);
		break;
	default: throw std::logic_error("not a classical family");
	}
	return A;
}

RootSystemData make_data(const RootSystemType& t)
{
	RootSystemData g;
	g.type = t;
	long n = t.rank;
	g.d.assign(n, 1);

	switch (t.family) {
	case Family::A:
		g.cartan = classical_cartan(t.family, n);
		g.weight_to_root = classical_weight_to_root(t.family, n);
		g.pi1.factors = {n + 1};
		g.pi1_gen_weight = {n};
		g.pos_roots_by_d = {{1, n * (n + 1) / 2}};
		break;
	case Family::B:
		for (long i = 0; i + 1 < n; ++i) g.d[i] = 2;
		g.cartan = classical_cartan(t.family, n);
		g.weight_to_root = classical_weight_to_root(t.family, n);
		g.pi1.factors = {2};
		g.pi1_gen_weight = {n};
		g.pos_roots_by_d = {{1, n}, {2, n * (n - 1)}};
		break;
	case Family::C:
		g.d[n - 1] = 2;
		g.cartan = classical_cartan(t.family, n);
		g.weight_to_root = classical_weight_to_root(t.family, n);
		g.pi1.factors = {2};
		// lambda_n lies in the root lattice for even n; lambda_1 generates then
		g.pi1_gen_weight = {n % 2 ? n : 1};
		g.pos_roots_by_d = {{1, n * (n - 1)}, {2, n}};
		break;
	case Family::D:
		g.cartan = classical_cartan(t.family, n);
		g.weight_to_root = classical_weight_to_root(t.family, n);
		if (n % 2 == 0) {
			g.pi1.factors = {2, 2};
			g.pi1_gen_weight = {n - 1, n};
		} else {
			g.pi1.factors = {4};
			g.pi1_gen_weight = {n};
		}
		g.pos_roots_by_d = {{1, n * (n - 1)}};
		break;
	case Family::E: {
		if (n == 6) {
			g.cartan = cartan_from_symmetrized(
			    {{2, 0, -1, 0, 0, 0},
			     {0, 2, 0, -1, 0, 0},
			     {-1, 0, 2, -1, 0, 0},
			     {0, -1, -1, 2, -1, 0},
			     {0, 0, 0, -1, 2, -1},
			     {0, 0, 0, 0, -1, 2}},
			    g.d);
			g.weight_to_root = ratmat({{frac(4, 3), 1, frac(5, 3), 2, frac(4, 3), frac(2, 3)},
			                           {1, 2, 2, 3, 2, 1},
			                           {frac(5, 3), 2, frac(10, 3), 4, frac(8, 3), frac(4, 3)},
			                           {2, 3, 4, 6, 4, 2},
			                           {frac(4, 3), 2, frac(8, 3), 4, frac(10, 3), frac(5, 3)},
			                           {frac(2, 3), 1, frac(4, 3), 2, frac(5, 3), frac(4, 3)}});
			g.pi1.factors = {3};
			g.pi1_gen_weight = {6};
			g.pos_roots_by_d = {{1, 36}};
		} else if (n == 7) {
			g.cartan = cartan_from_symmetrized(
			    {{2, 0, -1, 0, 0, 0, 0},
			     {0, 2, 0, -1, 0, 0, 0},
			     {-1, 0, 2, -1, 0, 0, 0},
			     {0, -1, -1, 2, -1, 0, 0},
			     {0, 0, 0, -1, 2, -1, 0},
			     {0, 0, 0, 0, -1, 2, -1},
			     {0, 0, 0, 0, 0, -1, 2}},
			    g.d);
			g.weight_to_root = ratmat({{2, 2, 3, 4, 3, 2, 1},
			                           {2, frac(7, 2), 4, 6, frac(9, 2), 3, frac(3, 2)},
			                           {3, 4, 6, 8, 6, 4, 2},
			                           {4, 6, 8, 12, 9, 6, 3},
			                           {3, frac(9, 2), 6, 9, frac(15, 2), 5, frac(5, 2)},
			                           {2, 3, 4, 6, 5, 4, 2},
			                           {1, frac(3, 2), 2, 3, frac(5, 2), 2, frac(3, 2)}});
			g.pi1.factors = {2};
			g.pi1_gen_weight = {7};
			g.pos_roots_by_d = {{1, 63}};
		} else {
			g.cartan = cartan_from_symmetrized(
			    {{2, 0, -1, 0, 0, 0, 0, 0},
			     {0, 2, 0, -1, 0, 0, 0, 0},
			     {-1, 0, 2, -1, 0, 0, 0, 0},
			     {0, -1, -1, 2, -1, 0, 0, 0},
			     {0, 0, 0, -1, 2, -1, 0, 0},
			     {0, 0, 0, 0, -1, 2, -1, 0},
			     {0, 0, 0, 0, 0, -1, 2, -1},
			     {0, 0, 0, 0, 0, 0, -1, 2}},
			    g.d);
			g.weight_to_root = ratmat({{4, 5, 7, 10, 8, 6, 4, 2},
			                           {5, 8, 10, 15, 12, 9, 6, 3},
			                           {7, 10, 14, 20, 16, 12, 8, 4},
			                           {10, 15, 20, 30, 24, 18, 12, 6},
			                           {8, 12, 16, 24, 20, 15, 10, 5},
			                           {6, 9, 12, 18, 15, 12, 8, 4},
			                           {4, 6, 8, 12, 10, 8, 6, 3},
			                           {2, 3, 4, 6, 5, 4, 3, 2}});
			g.pi1.factors = {};
			g.pi1_gen_weight = {};
			g.pos_roots_by_d = {{1, 120}};
		}
		break;
	}
	case Family::F:
		g.d = {2, 2, 1, 1};
		g.cartan = cartan_from_symmetrized(
		    {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}, g.d);
		// exact inverse of the Cartan matrix; the printed source table for F4
		// carries the d-scaled Gram, not this matrix
		g.weight_to_root = ratmat({{2, 3, 2, 1}, {3, 6, 4, 2}, {4, 8, 6, 3}, {2, 4, 3, 2}});
		g.pi1.factors = {};
		g.pi1_gen_weight = {};
		g.pos_roots_by_d = {{1, 12}, {2, 12}};
		break;
	case Family::G:
		g.d = {1, 3};
		g.cartan = cartan_from_symmetrized({{2, -3}, {-3, 6}}, g.d);
		g.weight_to_root = ratmat({{2, 3}, {1, 2}});
		g.pi1.factors = {};
		g.pi1_gen_weight = {};
		g.pos_roots_by_d = {{1, 3}, {3, 3}};
		break;
	}

	// gram_{ij} = (lambda_i, lambda_j) = d_j * W_{ji}
	g.gram_weights = RatMat(n, n);
	for (long i = 0; i < n; ++i)
		for (long j = 0; j < n; ++j)
			g.gram_weights.at(i, j) = Rat(g.d[j]) * g.weight_to_root.at(j, i);

	// construction invariants: cartan * weight_to_root = id, gram symmetric
	for (long i = 0; i < n; ++i)
		for (long j = 0; j < n; ++j) {
			Rat s;
			for (long k = 0; k < n; ++k)
				s += Rat(g.cartan.at(i, k)) * g.weight_to_root.at(k, j);
			if (s != (i == j ? 1 : 0)) throw std::logic_error("weight_to_root is not the Cartan inverse");
			if (g.gram_weights.at(i, j) != g.gram_weights.at(j, i))
				throw std::logic_error("gram matrix not symmetric");
		}
	return g;
}

} // namespace

const RootSystemData& build(const RootSystemType& type)
{
	static std::map<std::pair<char, long>, RootSystemData> cache;
	static std::mutex m;
	std::lock_guard<std::mutex> lock(m);
	auto key = std::make_pair((char)type.family, type.rank);
	auto it = cache.find(key);
	if (it == cache.end()) it = cache.emplace(key, make_data(type)).first;
	return it->second;
}

Rat RootSystemData::killing(const RatVec& v, const RatVec& w) const
{
	if ((long)v.size() != rank() || (long)w.size() != rank())
		throw std::invalid_argument("killing: dimension mismatch");
	Rat s;
	for (long i = 0; i < rank(); ++i) {
		if (v[i] == 0) continue;
		for (long j = 0; j < rank(); ++j)
			s += v[i] * gram_weights.at(i, j) * w[j];
	}
	return s;
}

Rat RootSystemData::killing_zz(const std::vector<Int>& v, const std::vector<Int>& w) const
{
	RatVec a(v.begin(), v.end()), b(w.begin(), w.end());
	return killing(a, b);
}

std::vector<Int> RootSystemData::simple_root(long i) const
{
	std::vector<Int> a(rank());
	for (long k = 0; k < rank(); ++k) a[k] = cartan.at(k, i);
	return a;
}

bool small_ell_condition(const RootSystemData& g, long ell)
{
	for (long i = 0; i < g.rank(); ++i)
		if (g.ell_i(i, ell) <= 1) return false;
	for (long i = 0; i < g.rank(); ++i)
		for (long j = 0; j < g.rank(); ++j) {
			if (i == j) continue;
			if (Int(g.ell_i(i, ell)) <= -g.cartan.at(i, j)) return false;
		}
	return true;
}

std::optional<std::vector<RootSystemType>> substitute_excluded(const RootSystemType& type, long ell)
{
	if (ell <= 2) throw std::domain_error("ell must exceed 2");
	switch (type.family) {
	case Family::B:
		if (ell == 4) return std::vector<RootSystemType>(type.rank, parse_type('A', 1));
		break;
	case Family::C:
		if (ell == 4) {
			if (type.rank == 3) return std::vector<RootSystemType>{parse_type('A', 3)}; // D_3
			return std::vector<RootSystemType>{parse_type('D', type.rank)};
		}
		break;
	case Family::F:
		if (ell == 4) return std::vector<RootSystemType>{parse_type('D', 4)};
		break;
	case Family::G:
		if (ell == 3 || ell == 6) return std::vector<RootSystemType>{parse_type('A', 2)};
		if (ell == 4) return std::vector<RootSystemType>{parse_type('A', 3)};
		break;
	default: break;
	}
	return std::nullopt;
}

Int uq_dimension(const RootSystemData& g, long ell, const Int& lattice_index)
{
	Int dim = lattice_index;
	for (auto [dalpha, count] : g.pos_roots_by_d) {
		long la = g.ell_alpha(dalpha, ell);
		if (la <= 1) continue;
		Int f = Int(la) * Int(la);
		for (long c = 0; c < count; ++c) dim *= f;
	}
	return dim;
}

} // namespace uqr
