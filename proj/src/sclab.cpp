#include "bracketword/sclab.hpp"
#include "bracketword/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace bw {

namespace {

void check_dim(long d, const std::vector<std::vector<Int>> &vecs)
{
	for (auto &v : vecs)
		if ((long)v.size() != d)
			fail(errc::usage, "vector dimension mismatch");
}

}

IntLattice span_lattice(long d, const std::vector<std::vector<Int>> &vecs)
{
	check_dim(d, vecs);
	std::vector<std::vector<Int>> rows = vecs;
	std::vector<std::vector<Int>> hnf;
	size_t r = 0;
	for (long col = 0; col < d; col++) {
		/* gcd-combine every row with a nonzero entry in this column */
		for (;;) {
			size_t best = rows.size();
			for (size_t i = r; i < rows.size(); i++) {
				if (rows[i][col] == 0)
					continue;
				if (best == rows.size() ||
				    cmp(abs(rows[i][col]), abs(rows[best][col])) < 0)
					best = i;
			}
			if (best == rows.size())
				break;
			std::swap(rows[r], rows[best]);
			bool cleared = true;
			for (size_t i = r + 1; i < rows.size(); i++) {
				if (rows[i][col] == 0)
					continue;
				Int q = rows[i][col] / rows[r][col]; /* truncation ok */
				for (long j = 0; j < d; j++)
					rows[i][j] -= q * rows[r][j];
				if (rows[i][col] != 0)
					cleared = false;
			}
			if (cleared)
				break;
		}
		if (r >= rows.size() || rows[r][col] == 0)
			continue;
		if (rows[r][col] < 0)
			for (long j = 0; j < d; j++)
				rows[r][j] = -rows[r][j];
		/* reduce the entries above the pivot into [0, pivot) */
		for (auto &prev : hnf) {
			Int q = prev[col] / rows[r][col];
			if (prev[col] - q * rows[r][col] < 0)
				q -= 1;
			for (long j = 0; j < d; j++)
				prev[j] -= q * rows[r][j];
		}
		hnf.push_back(rows[r]);
		r++;
	}
	IntLattice L;
	L.d = d;
	L.basis = std::move(hnf);
	return L;
}

bool IntLattice::contains(const std::vector<Int> &v) const
{
	if ((long)v.size() != d)
		fail(errc::usage, "vector dimension mismatch");
	std::vector<Int> w = v;
	for (auto &row : basis) {
		long col = 0;
		while (col < d && row[col] == 0)
			col++;
		if (w[col] % row[col] != 0)
			return false;
		Int q = w[col] / row[col];
		for (long j = 0; j < d; j++)
			w[j] -= q * row[j];
	}
	for (auto &x : w)
		if (x != 0)
			return false;
	return true;
}

namespace {

/* Odometer over the box {-(N-1),...,N-1}^d in lexicographic order. */
bool advance(std::vector<long> &m, long N)
{
	for (size_t i = m.size(); i-- > 0;) {
		if (++m[i] < N)
			return true;
		m[i] = -(N - 1);
	}
	return false;
}

RealValue box_dot(const std::vector<RealValue> &alpha, const std::vector<long> &m)
{
	RealValue s{Rat(0)};
	for (size_t i = 0; i < alpha.size(); i++)
		if (m[i] != 0)
			s = s + alpha[i] * RealValue(Rat(m[i]));
	return s;
}

}

RelationSet enumerate_relations(const std::vector<RealValue> &alpha,
                                const RealValue &eps, long N)
{
	long d = (long)alpha.size();
	if (d < 1 || d > 4 || N < 1 || N > 64)
		fail(errc::too_large, "relation enumeration bounded to d <= 4, N <= 64");
	double total = std::pow(2.0 * N - 1, (double)d);
	if (total > 2e7)
		fail(errc::too_large, "relation box too large to enumerate");

	/* double prefilter with a conservative margin; exact check only for
	 * near-relations */
	std::vector<double> ad(d);
	double scale = 1;
	for (long i = 0; i < d; i++) {
		ad[i] = alpha[i].enclosure_bits(48).mid().get_d();
		scale += N * std::fabs(ad[i]);
	}
	double eps_hi = eps.enclosure_bits(48).hi.get_d();
	double margin = 1e-6 * scale;

	RelationSet R;
	R.d = d;
	R.N = N;
	std::vector<long> m(d, -(N - 1));
	do {
		double dot = 0;
		for (long i = 0; i < d; i++)
			dot += ad[i] * m[i];
		if (std::fabs(dot) > eps_hi + margin)
			continue;
		RealValue s = box_dot(alpha, m);
		if (s.sign() < 0)
			s = -s;
		if ((eps - s).sign() > 0)
			R.members.emplace_back(m.begin(), m.end());
	} while (advance(m, N));
	return R;
}

SandwichCertificate lattice_approx(const std::vector<RealValue> &alpha,
                                   const RealValue &eps, long N)
{
	SandwichCertificate cert;
	cert.relations = enumerate_relations(alpha, eps, N);
	long d = cert.relations.d;
	cert.lattice = span_lattice(d, cert.relations.members);
	cert.inclusion_exact = true;
	for (auto &v : cert.relations.members)
		if (!cert.lattice.contains(v))
			cert.inclusion_exact = false;

	cert.lattice_points = 0;
	Rat worst(0);
	std::vector<long> m(d, -(N - 1));
	std::vector<Int> vi(d);
	do {
		for (long i = 0; i < d; i++)
			vi[i] = m[i];
		if (!cert.lattice.contains(vi))
			continue;
		cert.lattice_points++;
		QIval iv = box_dot(alpha, m).enclosure_bits(64);
		Rat lo = abs(iv.lo), hi = abs(iv.hi);
		Rat mag = lo > hi ? lo : hi;
		if (mag > worst)
			worst = mag;
	} while (advance(m, N));

	Rat eps_lo = eps.enclosure_bits(64).lo;
	if (eps_lo <= 0)
		fail(errc::usage, "eps must be positive");
	cert.c_hat = worst / (Rat(pow_int(Int(N), (unsigned long)d)) * eps_lo);
	return cert;
}

namespace {

using RatVec = std::vector<Rat>;

struct CutPoint {
	size_t idx; /* original point index, for the bitmask */
	RatVec x;
};

RatVec sub(const RatVec &a, const RatVec &b)
{
	RatVec r(a.size());
	for (size_t i = 0; i < a.size(); i++)
		r[i] = a[i] - b[i];
	return r;
}

bool is_zero(const RatVec &v)
{
	for (auto &x : v)
		if (x != 0)
			return false;
	return true;
}

/* Greedy basis of the span of the given vectors; returns the chosen
 * original vectors (not the echelon remainders). */
std::vector<RatVec> span_basis(const std::vector<RatVec> &vecs)
{
	std::vector<RatVec> echelon, basis;
	for (auto &v : vecs) {
		RatVec w = v;
		for (auto &e : echelon) {
			size_t p = 0;
			while (p < e.size() && e[p] == 0)
				p++;
			if (w[p] != 0) {
				Rat f = w[p] / e[p];
				for (size_t j = 0; j < w.size(); j++)
					w[j] -= f * e[j];
			}
		}
		if (!is_zero(w)) {
			echelon.push_back(w);
			basis.push_back(v);
		}
	}
	return basis;
}

/* Solve sum_j lambda_j B_j = rhs for affinely consistent systems. */
RatVec solve_in_span(const std::vector<RatVec> &B, const RatVec &rhs)
{
	size_t k = rhs.size(), r = B.size();
	/* augmented columns B | rhs, Gaussian elimination */
	std::vector<RatVec> M(k, RatVec(r + 1));
	for (size_t i = 0; i < k; i++) {
		for (size_t j = 0; j < r; j++)
			M[i][j] = B[j][i];
		M[i][r] = rhs[i];
	}
	std::vector<long> pivot_row(r, -1);
	size_t row = 0;
	for (size_t col = 0; col < r && row < k; col++) {
		size_t p = row;
		while (p < k && M[p][col] == 0)
			p++;
		if (p == k)
			continue;
		std::swap(M[row], M[p]);
		for (size_t i = 0; i < k; i++) {
			if (i == row || M[i][col] == 0)
				continue;
			Rat f = M[i][col] / M[row][col];
			for (size_t j = col; j <= r; j++)
				M[i][j] -= f * M[row][j];
		}
		pivot_row[col] = (long)row;
		row++;
	}
	RatVec lambda(r, Rat(0));
	for (size_t col = 0; col < r; col++)
		if (pivot_row[col] >= 0)
			lambda[col] =
			    M[(size_t)pivot_row[col]][r] / M[(size_t)pivot_row[col]][col];
	return lambda;
}

Rat dot(const RatVec &a, const RatVec &b)
{
	Rat s(0);
	for (size_t i = 0; i < a.size(); i++)
		s += a[i] * b[i];
	return s;
}

/* All subsets of the given points cut off by a half-space, as bitmasks
 * over the original indices.  Supported positions are hyperplanes through
 * k affinely independent points; the points on the hyperplane are
 * resolved by recursing one dimension down (infinitesimal tilt). */
std::set<uint32_t> cuts_rec(const std::vector<CutPoint> &pts, size_t k)
{
	std::set<uint32_t> out;
	if (pts.empty()) {
		out.insert(0);
		return out;
	}
	uint32_t full = 0;
	for (auto &p : pts)
		full |= (uint32_t)1 << p.idx;

	/* reduce to the affine hull */
	std::vector<RatVec> diffs;
	for (auto &p : pts)
		diffs.push_back(sub(p.x, pts[0].x));
	std::vector<RatVec> hull = span_basis(diffs);
	size_t r = hull.size();
	if (r == 0) {
		out.insert(0);
		out.insert(full);
		return out;
	}
	if (r < k) {
		std::vector<CutPoint> reduced;
		for (auto &p : pts)
			reduced.push_back({p.idx, solve_in_span(hull, sub(p.x, pts[0].x))});
		return cuts_rec(reduced, r);
	}

	out.insert(0);
	out.insert(full);
	/* enumerate k-subsets spanning a hyperplane */
	std::vector<size_t> sel(k);
	for (size_t i = 0; i < k; i++)
		sel[i] = i;
	auto next_comb = [&]() {
		size_t i = k;
		while (i-- > 0) {
			if (sel[i] < pts.size() - k + i) {
				sel[i]++;
				for (size_t j = i + 1; j < k; j++)
					sel[j] = sel[j - 1] + 1;
				return true;
			}
		}
		return false;
	};
	if (pts.size() < k)
		return out;
	do {
		const RatVec &q0 = pts[sel[0]].x;
		std::vector<RatVec> V;
		for (size_t i = 1; i < k; i++)
			V.push_back(sub(pts[sel[i]].x, q0));
		/* normal to the hyperplane spanned by V */
		RatVec w(k, Rat(0));
		if (k == 1)
			w[0] = 1;
		else if (k == 2) {
			w[0] = -V[0][1];
			w[1] = V[0][0];
		} else {
			w[0] = V[0][1] * V[1][2] - V[0][2] * V[1][1];
			w[1] = V[0][2] * V[1][0] - V[0][0] * V[1][2];
			w[2] = V[0][0] * V[1][1] - V[0][1] * V[1][0];
		}
		if (is_zero(w))
			continue; /* degenerate subset */
		Rat c = dot(w, q0);
		uint32_t mneg = 0, mpos = 0;
		std::vector<CutPoint> onplane;
		for (auto &p : pts) {
			Rat s = dot(w, p.x) - c;
			if (s < 0)
				mneg |= (uint32_t)1 << p.idx;
			else if (s > 0)
				mpos |= (uint32_t)1 << p.idx;
			else
				onplane.push_back({p.idx, solve_in_span(V, sub(p.x, q0))});
		}
		for (uint32_t X : cuts_rec(onplane, k - 1)) {
			out.insert(mneg | X);
			out.insert(mpos | X);
		}
	} while (next_comb());
	return out;
}

unsigned long binom(unsigned long n, unsigned long k)
{
	if (k > n)
		return 0;
	unsigned long r = 1;
	for (unsigned long i = 1; i <= k; i++)
		r = r * (n - i + 1) / i;
	return r;
}

}

CutFamily halfspace_cuts(const std::vector<std::vector<Int>> &points)
{
	size_t n = points.size();
	if (n == 0 || n > 14)
		fail(errc::too_large, "cut enumeration bounded to 1..14 points");
	size_t d = points[0].size();
	if (d < 1 || d > 3)
		fail(errc::too_large, "cut enumeration bounded to d <= 3");
	check_dim((long)d, points);

	std::vector<CutPoint> pts;
	for (size_t i = 0; i < n; i++) {
		RatVec x(d);
		for (size_t j = 0; j < d; j++)
			x[j] = Rat(points[i][j]);
		pts.push_back({i, x});
	}
	std::set<uint32_t> masks = cuts_rec(pts, d);

	CutFamily fam;
	for (uint32_t mask : masks) {
		std::vector<size_t> idxs;
		for (size_t i = 0; i < n; i++)
			if (mask & ((uint32_t)1 << i))
				idxs.push_back(i);
		fam.cuts.push_back(std::move(idxs));
	}
	std::sort(fam.cuts.begin(), fam.cuts.end());
	fam.bound = 0;
	for (size_t i = 0; i <= d; i++)
		fam.bound += binom((unsigned long)n - 1, i);
	fam.bound *= 2;
	fam.within_bound = fam.cuts.size() <= fam.bound;
	return fam;
}

namespace {

Int nint_of(const Rat &x)
{
	return floor_rat(x + Rat(1, 2));
}

/* Reconstruct g_alpha|[N] for the fractional part of alpha from
 * (alpha*, Lambda cap B, Lambda+ cap B) via the three-case formula, and
 * compare against direct evaluation.  Retries with smaller eps until the
 * lemma hypotheses are met. */
bool verify_reconstruction(const std::vector<std::vector<Int>> &h,
                           const std::vector<Rat> &alpha, const Int &H)
{
	size_t d = h.size(), N = h[0].size();
	std::vector<Rat> fr(d);
	for (size_t i = 0; i < d; i++)
		fr[i] = frac_rat(alpha[i]);
	Int dH = Int(d) * H;
	long dHl = (long)dH.get_si();

	std::vector<Rat> target(N); /* sum fr_i h_i(n) */
	for (size_t n = 0; n < N; n++) {
		Rat s(0);
		for (size_t i = 0; i < d; i++)
			s += fr[i] * Rat(h[i][n]);
		target[n] = s;
	}

	Rat eps = Rat(1) / Rat(100 * pow_int(dH, (unsigned long)d));
	for (int attempt = 0; attempt < 40; attempt++, eps /= 2) {
		Rat delta = eps / Rat(dH);
		std::vector<Rat> as(d);
		for (size_t i = 0; i < d; i++)
			as[i] = Rat(floor_rat(fr[i] / delta)) * delta;

		/* relations of (1, fr) over the box enclosing B, solved for
		 * the first coordinate */
		std::vector<std::vector<Int>> members;
		std::vector<long> m(d, -dHl);
		do {
			Rat t(0);
			for (size_t i = 0; i < d; i++)
				t += fr[i] * Rat(m[i]);
			Int m0 = -nint_of(t);
			if (abs(m0) > dH)
				continue;
			Rat rel = Rat(m0) + t;
			if (abs(rel) < eps) {
				std::vector<Int> v(d + 1);
				v[0] = m0;
				for (size_t i = 0; i < d; i++)
					v[i + 1] = m[i];
				members.push_back(std::move(v));
			}
		} while (advance(m, dHl + 1));
		IntLattice L = span_lattice((long)d + 1, members);

		bool ok = true;
		for (size_t n = 0; n < N && ok; n++) {
			Rat star(0);
			for (size_t i = 0; i < d; i++)
				star += as[i] * Rat(h[i][n]);
			Int h0 = -nint_of(star);
			std::vector<Int> hv(d + 1);
			hv[0] = h0;
			for (size_t i = 0; i < d; i++)
				hv[i + 1] = h[i][n];
			Int rec;
			if (!L.contains(hv)) {
				rec = floor_rat(star);
			} else {
				Rat rel = Rat(h0) + target[n];
				if (!(abs(rel) < Rat(1, 2))) {
					ok = false; /* constant too large; shrink eps */
					break;
				}
				if (rel >= 0)
					rec = floor_rat(star + Rat(1, 2));
				else
					rec = floor_rat(star - Rat(1, 2));
			}
			if (rec != floor_rat(target[n]))
				ok = false;
		}
		if (ok)
			return true;
	}
	fail(errc::hypothesis_violated,
	     "three-case reconstruction failed to stabilise");
}

}

PrefixCountReport prefix_count_experiment(const std::vector<std::vector<Int>> &h,
                                          const Rat &R, const Rat &step,
                                          size_t verify_samples,
                                          unsigned long seed)
{
	if (h.empty() || h[0].empty())
		fail(errc::usage, "need at least one nonempty sequence");
	size_t d = h.size(), N = h[0].size();
	for (auto &hi : h)
		if (hi.size() != N)
			fail(errc::usage, "sequences must share a length");
	if (R <= 0 || step <= 0)
		fail(errc::usage, "R and grid step must be positive");

	PrefixCountReport rep;
	rep.d = (long)d;
	rep.N = N;
	rep.R = R;
	rep.step = step;
	rep.H = 1;
	for (auto &hi : h)
		for (auto &x : hi) {
			Int ax = abs(x);
			if (ax > rep.H)
				rep.H = ax;
		}

	Int K = ceil_rat(2 * R / step);
	double total = std::pow(K.get_d(), (double)d);
	if (total > 2e6)
		fail(errc::too_large, "parameter grid too large");
	long Kl = (long)K.get_si();

	std::set<std::vector<Int>> prefixes;
	std::vector<long> kvec(d, 0);
	bool more = true;
	while (more) {
		std::vector<Rat> a(d);
		for (size_t i = 0; i < d; i++)
			a[i] = -R + Rat(kvec[i]) * step;
		std::vector<Int> g(N);
		for (size_t n = 0; n < N; n++) {
			Rat s(0);
			for (size_t i = 0; i < d; i++)
				s += a[i] * Rat(h[i][n]);
			g[n] = floor_rat(s);
		}
		prefixes.insert(std::move(g));
		rep.grid_points++;
		more = false;
		for (size_t i = d; i-- > 0;) {
			if (++kvec[i] < Kl) {
				more = true;
				break;
			}
			kvec[i] = 0;
		}
	}
	rep.distinct = prefixes.size();

	std::mt19937_64 rng(seed);
	for (size_t s = 0; s < verify_samples; s++) {
		std::vector<Rat> a(d);
		for (size_t i = 0; i < d; i++) {
			unsigned long q = rng() % 997 + 1;
			Int lo = ceil_rat(-R * Rat((long)q));
			Int hi = floor_rat(R * Rat((long)q)) - 1;
			Int span = hi - lo + 1;
			if (span <= 0) {
				a[i] = 0;
				continue;
			}
			Int num = lo + Int(rng() % span.get_ui());
			a[i] = Rat(num) / Rat((long)q);
		}
		if (verify_reconstruction(h, a, rep.H))
			rep.verified++;
	}
	return rep;
}

}
