#include "bracketword/poly.hpp"
#include "bracketword/errors.hpp"

#include <deque>

namespace bw {

void QPoly::trim()
{
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

QPoly::QPoly(Rat constant)
{
	if (constant != 0)
		c_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rat> coeffs)
: c_(std::move(coeffs))
{
	trim();
}

QPoly QPoly::x()
{
	return QPoly(std::vector<Rat>{Rat(0), Rat(1)});
}

QPoly QPoly::from_desc(std::initializer_list<long> hi_to_lo)
{
	std::vector<Rat> c;
	for (auto it = std::rbegin(hi_to_lo); it != std::rend(hi_to_lo); ++it)
		c.push_back(Rat(*it));
	return QPoly(std::move(c));
}

bool QPoly::integer_coeffs() const
{
	for (const Rat &x : c_)
		if (x.get_den() != 1)
			return false;
	return true;
}

Rat QPoly::operator()(const Rat &x) const
{
	Rat acc(0);
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * x + *it;
	return acc;
}

QIval QPoly::operator()(const QIval &x) const
{
	QIval acc(Rat(0));
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * x + QIval(*it);
	return acc;
}

QPoly operator+(const QPoly &a, const QPoly &b)
{
	std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
	for (size_t i = 0; i < a.c_.size(); i++)
		c[i] += a.c_[i];
	for (size_t i = 0; i < b.c_.size(); i++)
		c[i] += b.c_[i];
	return QPoly(std::move(c));
}

QPoly operator-(const QPoly &a, const QPoly &b)
{
	return a + (-b);
}

QPoly operator-(const QPoly &a)
{
	std::vector<Rat> c(a.c_);
	for (Rat &x : c)
		x = -x;
	return QPoly(std::move(c));
}

QPoly operator*(const QPoly &a, const QPoly &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
	for (size_t i = 0; i < a.c_.size(); i++)
		for (size_t j = 0; j < b.c_.size(); j++)
			c[i + j] += a.c_[i] * b.c_[j];
	return QPoly(std::move(c));
}

QPoly operator*(const QPoly &a, const Rat &s)
{
	std::vector<Rat> c(a.c_);
	for (Rat &x : c)
		x *= s;
	return QPoly(std::move(c));
}

QPoly QPoly::derivative() const
{
	if (c_.size() <= 1)
		return {};
	std::vector<Rat> c(c_.size() - 1);
	for (size_t i = 1; i < c_.size(); i++)
		c[i - 1] = c_[i] * Rat((long)i);
	return QPoly(std::move(c));
}

QPoly QPoly::monic() const
{
	if (is_zero())
		return {};
	return *this * (Rat(1) / lead());
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly &d) const
{
	if (d.is_zero())
		fail(errc::usage, "polynomial division by zero");
	std::vector<Rat> rem(c_);
	long dd = d.degree();
	long dr = (long)rem.size() - 1;
	if (dr < dd)
		return {{}, *this};
	std::vector<Rat> quo(dr - dd + 1, Rat(0));
	for (long k = dr; k >= dd; k--) {
		if (rem[k] == 0)
			continue;
		Rat f = rem[k] / d.lead();
		quo[k - dd] = f;
		for (long i = 0; i <= dd; i++)
			rem[k - dd + i] -= f * d.c_[i];
	}
	return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(QPoly a, QPoly b)
{
	while (!b.is_zero()) {
		QPoly r = a.mod(b);
		a = std::move(b);
		b = std::move(r);
	}
	return a.monic();
}

Rat resultant(const QPoly &a, const QPoly &b)
{
	long m = a.degree(), n = b.degree();
	if (m < 0 || n < 0)
		return Rat(0);
	if (m == 0)
		return pow_rat(a.lead(), (unsigned long)n);
	if (n == 0)
		return pow_rat(b.lead(), (unsigned long)m);
	/* Sylvester matrix, rational Gaussian elimination */
	size_t sz = (size_t)(m + n);
	std::vector<std::vector<Rat>> M(sz, std::vector<Rat>(sz, Rat(0)));
	for (long r = 0; r < n; r++)
		for (long i = 0; i <= m; i++)
			M[(size_t)r][(size_t)(r + i)] = a.coeff((size_t)(m - i));
	for (long r = 0; r < m; r++)
		for (long i = 0; i <= n; i++)
			M[(size_t)(n + r)][(size_t)(r + i)] = b.coeff((size_t)(n - i));
	Rat det(1);
	for (size_t col = 0; col < sz; col++) {
		size_t piv = col;
		while (piv < sz && M[piv][col] == 0)
			piv++;
		if (piv == sz)
			return Rat(0);
		if (piv != col) {
			std::swap(M[piv], M[col]);
			det = -det;
		}
		det *= M[col][col];
		Rat inv = Rat(1) / M[col][col];
		for (size_t r = col + 1; r < sz; r++) {
			if (M[r][col] == 0)
				continue;
			Rat f = M[r][col] * inv;
			for (size_t cc = col; cc < sz; cc++)
				M[r][cc] -= f * M[col][cc];
		}
	}
	return det;
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly &p)
{
	std::vector<QPoly> s;
	s.push_back(p);
	QPoly d = p.derivative();
	if (!d.is_zero())
		s.push_back(d);
	while (s.size() >= 2 && !s.back().is_zero()) {
		QPoly r = -(s[s.size() - 2].mod(s.back()));
		if (r.is_zero())
			break;
		s.push_back(std::move(r));
	}
	return s;
}

long sign_changes(const std::vector<QPoly> &chain, const Rat &x)
{
	long changes = 0;
	int prev = 0;
	for (const QPoly &p : chain) {
		Rat v = p(x);
		int s = v > 0 ? 1 : v < 0 ? -1 : 0;
		if (s == 0)
			continue;
		if (prev != 0 && s != prev)
			changes++;
		prev = s;
	}
	return changes;
}

}

long QPoly::count_roots(const Rat &lo, const Rat &hi) const
{
	if (is_zero())
		fail(errc::usage, "count_roots of zero polynomial");
	if (lo >= hi)
		return 0;
	auto chain = sturm_chain(*this);
	return sign_changes(chain, lo) - sign_changes(chain, hi);
}

long QPoly::count_real_roots() const
{
	Rat b = root_bound();
	return count_roots(-b, b);
}

Rat QPoly::root_bound() const
{
	if (degree() <= 0)
		return Rat(1);
	Rat m(0);
	for (size_t i = 0; i + 1 < c_.size(); i++) {
		Rat a = c_[i] / lead();
		if (a < 0)
			a = -a;
		m = std::max(m, a);
	}
	return m + 1;
}

std::vector<QIval> QPoly::isolate_real_roots() const
{
	if (degree() < 1)
		return {};
	if (gcd(*this, derivative()).degree() > 0)
		fail(errc::usage, "isolate_real_roots requires squarefree input");
	std::vector<QIval> out;
	Rat b = root_bound();
	std::deque<QIval> work;
	work.push_back({-b, b});
	while (!work.empty()) {
		QIval iv = work.front();
		work.pop_front();
		long k = count_roots(iv.lo, iv.hi);
		/* (lo, hi] convention; a root exactly at the global left
		 * endpoint -b is impossible by the strict Cauchy bound */
		if (k == 0)
			continue;
		if (k == 1) {
			out.push_back(iv);
			continue;
		}
		Rat mid = iv.mid();
		if ((*this)(mid) == 0) {
			/* rational root at mid; isolate it exactly */
			out.push_back({mid, mid});
			Rat delta = iv.width() / 1024;
			while (count_roots(mid - delta, mid + delta) != 1 ||
			       (*this)(mid - delta) == 0 || (*this)(mid + delta) == 0)
				delta /= 2;
			work.push_back({iv.lo, mid - delta});
			work.push_back({mid + delta, iv.hi});
			continue;
		}
		work.push_back({iv.lo, mid});
		work.push_back({mid, iv.hi});
	}
	std::sort(out.begin(), out.end(),
	          [](const QIval &a, const QIval &b) { return a.hi < b.hi; });
	return out;
}

QIval QPoly::refine_root(QIval iv, const Rat &width) const
{
	if (iv.lo == iv.hi)
		return iv;
	Rat flo = (*this)(iv.lo);
	if (flo == 0)
		return {iv.lo, iv.lo};
	Rat fhi = (*this)(iv.hi);
	if (fhi == 0)
		return {iv.hi, iv.hi};
	if ((flo > 0) == (fhi > 0))
		fail(errc::usage, "refine_root: no sign change");
	bool lo_neg = flo < 0;
	while (iv.width() > width) {
		Rat mid = iv.mid();
		Rat fm = (*this)(mid);
		if (fm == 0)
			return {mid, mid};
		if ((fm < 0) == lo_neg)
			iv.lo = mid;
		else
			iv.hi = mid;
	}
	return iv;
}

namespace {

/* binomial coefficient as Int */
Int binom(long n, long k)
{
	Int r;
	mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
	return r;
}

/* does the monic integer polynomial g divide p exactly? */
bool divides(const QPoly &g, const QPoly &p)
{
	return p.mod(g).is_zero();
}

/* recursively enumerate monic integer polynomials of degree k whose
 * i-th coefficient is bounded by bound[i], testing divisibility */
bool search_factor(const QPoly &p, long k, std::vector<Rat> &coeffs, long pos,
                   const std::vector<Int> &bound)
{
	if (pos == k) {
		QPoly g(coeffs);
		if (g.degree() == k && divides(g, p))
			return true;
		return false;
	}
	if (pos == 0) {
		/* constant coefficient must divide p(0) */
		Int p0 = p.coeff(0).get_num();
		for (Int c = -bound[0]; c <= bound[0]; c++) {
			if (c == 0 || !mpz_divisible_p(p0.get_mpz_t(), c.get_mpz_t()))
				continue;
			coeffs[0] = Rat(c);
			if (search_factor(p, k, coeffs, 1, bound))
				return true;
		}
		return false;
	}
	for (Int c = -bound[(size_t)pos]; c <= bound[(size_t)pos]; c++) {
		coeffs[(size_t)pos] = Rat(c);
		if (search_factor(p, k, coeffs, pos + 1, bound))
			return true;
	}
	return false;
}

}

bool QPoly::irreducible() const
{
	if (!is_monic() || !integer_coeffs())
		fail(errc::usage, "irreducibility test requires a monic integer polynomial");
	long n = degree();
	if (n <= 0)
		return false;
	if (n == 1)
		return true;
	if (coeff(0) == 0)
		return false; /* x divides */
	if (n > 8)
		fail(errc::too_large, "irreducibility test limited to degree <= 8");
	/* Mignotte-style bound: any monic factor of degree k has
	 * |g_i| <= binom(k, i) * (1 + sqrt(sum p_j^2)) */
	Int norm2(0);
	for (const Rat &x : c_)
		norm2 += x.get_num() * x.get_num();
	Int M = isqrt(norm2) + 1;
	for (long k = 1; k <= n / 2; k++) {
		std::vector<Int> bound((size_t)k);
		for (long i = 0; i < k; i++)
			bound[(size_t)i] = binom(k, i) * M;
		std::vector<Rat> coeffs((size_t)k + 1, Rat(0));
		coeffs[(size_t)k] = Rat(1);
		if (search_factor(*this, k, coeffs, 0, bound))
			return false;
	}
	return true;
}

std::string QPoly::str(const std::string &var) const
{
	if (is_zero())
		return "0";
	std::string s;
	for (long i = degree(); i >= 0; i--) {
		Rat a = coeff((size_t)i);
		if (a == 0)
			continue;
		bool neg = a < 0;
		Rat mag = neg ? Rat(-a) : a;
		if (s.empty())
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		bool unit = mag == 1 && i > 0;
		if (!unit)
			s += to_string(mag);
		if (i > 0) {
			if (!unit)
				s += "*";
			s += var;
			if (i > 1)
				s += "^" + std::to_string(i);
		}
	}
	return s;
}

}
