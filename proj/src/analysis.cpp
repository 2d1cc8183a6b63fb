#include "bracketword/analysis.hpp"
#include "bracketword/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bw {

namespace {

/* suffix array by prefix doubling with radix sort, O(H log H) */
std::vector<int> suffix_array(const Symbol *s, size_t n)
{
	std::vector<int> sa(n), rank(n), tmp(n), cnt;
	for (size_t i = 0; i < n; i++) {
		sa[i] = (int)i;
		rank[i] = s[i];
	}
	auto radix = [&](size_t k) {
		/* sort sa by (rank[i], rank[i+k]) using two counting passes */
		size_t m = n + 1;
		std::vector<int> key2(n), out(n);
		for (size_t i = 0; i < n; i++) {
			size_t j = (size_t)sa[i] + k;
			key2[i] = j < n ? rank[j] + 1 : 0;
		}
		cnt.assign(m + 1, 0);
		for (size_t i = 0; i < n; i++)
			cnt[(size_t)key2[i] + 1]++;
		for (size_t i = 1; i <= m; i++)
			cnt[i] += cnt[i - 1];
		for (size_t i = 0; i < n; i++)
			out[(size_t)cnt[(size_t)key2[i]]++] = sa[i];
		cnt.assign(m + 1, 0);
		for (size_t i = 0; i < n; i++)
			cnt[(size_t)rank[i] + 1]++;
		for (size_t i = 1; i <= m; i++)
			cnt[i] += cnt[i - 1];
		for (size_t i = 0; i < n; i++)
			sa[(size_t)cnt[(size_t)rank[(size_t)out[i]]]++] = out[i];
	};
	/* normalize initial ranks to [0, n) */
	{
		std::vector<int> order(n);
		for (size_t i = 0; i < n; i++)
			order[i] = (int)i;
		std::sort(order.begin(), order.end(),
		          [&](int a, int b) { return s[a] < s[b]; });
		int r = 0;
		for (size_t i = 0; i < n; i++) {
			if (i && s[order[i]] != s[order[i - 1]])
				r++;
			rank[(size_t)order[i]] = r;
		}
		std::sort(sa.begin(), sa.end(),
		          [&](int a, int b) { return rank[a] < rank[b]; });
	}
	for (size_t k = 1; k < n; k *= 2) {
		radix(k);
		tmp[(size_t)sa[0]] = 0;
		for (size_t i = 1; i < n; i++) {
			int a = sa[i - 1], b = sa[i];
			bool same = rank[a] == rank[b];
			if (same) {
				int ra = (size_t)a + k < n ? rank[(size_t)a + k] : -1;
				int rb = (size_t)b + k < n ? rank[(size_t)b + k] : -1;
				same = ra == rb;
			}
			tmp[(size_t)b] = tmp[(size_t)sa[i - 1]] + (same ? 0 : 1);
		}
		rank = tmp;
		if ((size_t)rank[(size_t)sa[n - 1]] == n - 1)
			break;
	}
	return sa;
}

/* Kasai LCP: lcp[i] = lcp(sa[i-1], sa[i]), lcp[0] = 0 */
std::vector<int> lcp_array(const Symbol *s, size_t n, const std::vector<int> &sa)
{
	std::vector<int> rank(n), lcp(n, 0);
	for (size_t i = 0; i < n; i++)
		rank[(size_t)sa[i]] = (int)i;
	int h = 0;
	for (size_t i = 0; i < n; i++) {
		if (rank[i] == 0) {
			h = 0;
			continue;
		}
		size_t j = (size_t)sa[(size_t)rank[i] - 1];
		while (i + (size_t)h < n && j + (size_t)h < n && s[i + (size_t)h] == s[j + (size_t)h])
			h++;
		lcp[(size_t)rank[i]] = h;
		if (h)
			h--;
	}
	return lcp;
}

}

size_t ComplexityProfile::at(size_t N) const
{
	for (auto &[n, p] : table)
		if (n == N)
			return p;
	fail(errc::usage, "length not tabulated: " + std::to_string(N));
}

ComplexityProfile subword_complexity(const WordPtr &a, const std::vector<size_t> &Ns,
                                     size_t horizon)
{
	size_t H = horizon;
	const Symbol *s = a->data(H);
	std::vector<int> sa = suffix_array(s, H);
	std::vector<int> lcp = lcp_array(s, H, sa);
	/* ge[N] = number of adjacent suffix pairs sharing a prefix of
	 * length >= N; distinct factors of length N = (H-N+1) - ge[N] */
	size_t maxN = 0;
	for (size_t N : Ns)
		maxN = std::max(maxN, N);
	std::vector<size_t> hist(maxN + 2, 0);
	for (size_t i = 1; i < H; i++) {
		size_t l = std::min((size_t)lcp[i], maxN);
		hist[l]++;
	}
	std::vector<size_t> ge(maxN + 2, 0);
	for (size_t l = maxN + 1; l-- > 0;)
		ge[l] = ge[l + 1] + hist[l];
	ComplexityProfile out;
	out.horizon = H;
	for (size_t N : Ns) {
		if (N == 0 || N > H)
			fail(errc::usage, "length out of range");
		out.table.emplace_back(N, H - N + 1 - ge[N]);
	}
	return out;
}

PeriodicityResult periodicity_check(const ComplexityProfile &profile)
{
	size_t best = 0;
	for (auto &[N, p] : profile.table) {
		if (p <= N)
			return {false, N, p};
		best = std::max(best, N);
	}
	return {true, best, 0};
}

namespace {

/* occurrence indicator prefix sums: P[i] = #occurrences starting < i */
std::vector<size_t> occurrence_prefix(const WordPtr &a, const std::vector<Symbol> &w,
                                      size_t H)
{
	if (w.empty())
		fail(errc::usage, "empty factor");
	const Symbol *s = a->data(H);
	std::vector<size_t> P(H + 1, 0);
	for (size_t i = 0; i < H; i++) {
		bool hit = i + w.size() <= H;
		for (size_t j = 0; hit && j < w.size(); j++)
			hit = s[i + j] == w[j];
		P[i + 1] = P[i] + (hit ? 1 : 0);
	}
	return P;
}

}

FrequencyReport frequency(const WordPtr &a, const std::vector<Symbol> &w,
                          const std::vector<size_t> &Ns, size_t horizon)
{
	std::vector<size_t> P = occurrence_prefix(a, w, horizon);
	FrequencyReport out;
	out.horizon = horizon;
	for (size_t N : Ns) {
		if (N == 0 || N > horizon)
			fail(errc::usage, "window out of range");
		size_t lastM = horizon - N;
		size_t mn = SIZE_MAX, mx = 0;
		for (size_t M = 0; M <= lastM; M++) {
			size_t c = P[M + N] - P[M];
			mn = std::min(mn, c);
			mx = std::max(mx, c);
		}
		out.rows.push_back({N, (double)mn / (double)N, (double)mx / (double)N,
		                    (double)(P[N] - P[0]) / (double)N});
	}
	return out;
}

RecurrenceResult recurrence_function(const WordPtr &a, const std::vector<Symbol> &w,
                                     size_t horizon)
{
	std::vector<size_t> P = occurrence_prefix(a, w, horizon);
	std::vector<size_t> occ;
	for (size_t i = 0; i + 1 <= horizon; i++)
		if (P[i + 1] > P[i])
			occ.push_back(i);
	if (occ.empty())
		return {true, 0};
	/* largest start-to-start gap, counting the leading and trailing
	 * occurrence-free stretches of the inspected prefix */
	size_t gap = occ[0];
	for (size_t i = 1; i < occ.size(); i++)
		gap = std::max(gap, occ[i] - occ[i - 1]);
	size_t starts = horizon - w.size() + 1;
	bool marker = false;
	if (starts > occ.back() + 1 && starts - 1 - occ.back() > gap) {
		gap = starts - 1 - occ.back();
		marker = true; /* gap still open at the horizon */
	}
	return {marker, gap + w.size()};
}

GrowthReport counting_and_discrepancy(const WordPtr &a, Symbol x,
                                      const std::vector<size_t> &Ns, size_t horizon)
{
	const Symbol *s = a->data(horizon);
	std::vector<size_t> P(horizon + 1, 0);
	for (size_t i = 0; i < horizon; i++)
		P[i + 1] = P[i] + (s[i] == x ? 1 : 0);
	GrowthReport out;
	out.horizon = horizon;
	out.freq_end = (double)P[horizon] / (double)horizon;
	for (size_t N : Ns) {
		if (N > horizon)
			fail(errc::usage, "count bound exceeds horizon");
		double d = std::fabs((double)P[N] - out.freq_end * (double)N);
		out.rows.push_back({N, P[N], d});
	}
	return out;
}

size_t balance_constant(const WordPtr &a, Symbol x, size_t L_max, size_t horizon)
{
	const Symbol *s = a->data(horizon);
	std::vector<size_t> P(horizon + 1, 0);
	for (size_t i = 0; i < horizon; i++)
		P[i + 1] = P[i] + (s[i] == x ? 1 : 0);
	size_t best = 0;
	for (size_t L = 1; L <= L_max && L <= horizon; L++) {
		size_t mn = SIZE_MAX, mx = 0;
		for (size_t i = 0; i + L <= horizon; i++) {
			size_t c = P[i + L] - P[i];
			mn = std::min(mn, c);
			mx = std::max(mx, c);
		}
		best = std::max(best, mx - mn);
	}
	return best;
}

namespace {

FitResult least_squares(const std::vector<std::pair<double, double>> &pts)
{
	if (pts.size() < 4)
		fail(errc::insufficient_samples, "need at least 4 samples");
	double xmin = pts[0].first, xmax = pts[0].first;
	for (auto &[x, y] : pts) {
		xmin = std::min(xmin, x);
		xmax = std::max(xmax, x);
	}
	double sx = 0, sy = 0, sxx = 0, sxy = 0;
	for (auto &[x, y] : pts) {
		sx += x;
		sy += y;
		sxx += x * x;
		sxy += x * y;
	}
	double n = (double)pts.size();
	double denom = n * sxx - sx * sx;
	if (denom == 0)
		fail(errc::insufficient_samples, "degenerate sample spread");
	FitResult r;
	r.slope = (n * sxy - sx * sy) / denom;
	r.intercept = (sy - r.slope * sx) / n;
	r.max_residual = 0;
	for (auto &[x, y] : pts)
		r.max_residual =
		    std::max(r.max_residual, std::fabs(y - r.slope * x - r.intercept));
	return r;
}

}

FitResult growth_exponent(const std::vector<std::pair<size_t, size_t>> &samples)
{
	std::vector<std::pair<double, double>> pts;
	double nmin = 0, nmax = 0;
	for (auto &[N, c] : samples) {
		if (N == 0 || c == 0)
			continue;
		double x = std::log((double)N);
		nmin = nmin == 0 ? (double)N : std::min(nmin, (double)N);
		nmax = std::max(nmax, (double)N);
		pts.emplace_back(x, std::log((double)c));
	}
	if (pts.size() < 4 || nmax < 100 * nmin)
		fail(errc::insufficient_samples,
		     "need 4+ points spanning two decades");
	return least_squares(pts);
}

FitResult log_fit(const std::vector<std::pair<size_t, size_t>> &samples)
{
	std::vector<std::pair<double, double>> pts;
	for (auto &[N, c] : samples)
		if (N > 0)
			pts.emplace_back(std::log((double)N), (double)c);
	return least_squares(pts);
}

CoverageReport surjection_coverage(const WordPtr &probe, unsigned long K,
                                   size_t horizon)
{
	CoverageReport out;
	out.K = K;
	out.horizon = horizon;
	out.first_hit.assign(K, std::vector<long>(K, -1));
	for (size_t n = 0; n < horizon; n++) {
		const std::string &name = probe->name_of(probe->at(n));
		auto comma = name.find(',');
		long k = std::stol(name.substr(1, comma - 1));
		long l = std::stol(name.substr(comma + 1, name.size() - comma - 2));
		if (k < 0 || l < 0 || (size_t)k > n || (size_t)l > n)
			fail(errc::usage, "component bound violated at n=" +
			                      std::to_string(n));
		if ((unsigned long)k < K && (unsigned long)l < K &&
		    out.first_hit[(size_t)k][(size_t)l] < 0) {
			out.first_hit[(size_t)k][(size_t)l] = (long)n;
			out.hit_count++;
		}
	}
	return out;
}

}
