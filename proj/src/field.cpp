#include "bracketword/field.hpp"
#include "bracketword/errors.hpp"

#include <sstream>

namespace bw {

FieldPtr NumberField::define(const QPoly &minpoly, const Rat &lo, const Rat &hi)
{
	if (!minpoly.is_monic() || !minpoly.integer_coeffs() || minpoly.degree() < 1)
		fail(errc::usage, "minimal polynomial must be monic with integer coefficients");
	if (!minpoly.irreducible())
		fail(errc::reducible, "minimal polynomial is reducible: " + minpoly.str());
	if (lo > hi)
		fail(errc::usage, "isolating interval is empty");
	if (minpoly.degree() == 1) {
		/* theta is rational; allow the degenerate interval */
		Rat root = -minpoly.coeff(0);
		if (!(lo <= root && root <= hi))
			fail(errc::no_root, "interval contains no root");
		return FieldPtr(new NumberField(minpoly, QIval(root, root)));
	}
	Rat flo = minpoly(lo), fhi = minpoly(hi);
	if (flo == 0 || fhi == 0)
		fail(errc::usage, "isolating interval endpoints must not be roots");
	long k = minpoly.count_roots(lo, hi);
	if (k == 0)
		fail(errc::no_root, "interval contains no root");
	if (k > 1)
		fail(errc::multiple_roots, "interval contains more than one root");
	if ((flo > 0) == (fhi > 0))
		fail(errc::no_root, "no sign change over the isolating interval");
	return FieldPtr(new NumberField(minpoly, QIval(lo, hi)));
}

QIval NumberField::theta(const Rat &eps) const
{
	std::lock_guard<std::mutex> lock(mu_);
	if (iso_.width() <= eps)
		return iso_;
	iso_ = minpoly_.refine_root(iso_, eps);
	return iso_;
}

Int NumberField::trace_power(unsigned long i) const
{
	long d = degree();
	/* Newton's identities for p_k = trace(theta^k), then the linear
	 * recurrence from the minimal polynomial */
	std::vector<Int> t;
	t.push_back(Int(d));
	for (long k = 1; (unsigned long)k <= i; k++) {
		if ((size_t)k < t.size())
			continue;
		Rat s(0);
		if (k <= d) {
			/* p_k = -k*a_{d-k} - sum_{j=1}^{k-1} a_{d-j} p_{k-j},
			 * writing minpoly = x^d + a_{d-1}x^{d-1} + ... + a_0 */
			s = Rat(-k) * minpoly_.coeff((size_t)(d - k));
			for (long j = 1; j < k; j++)
				s -= minpoly_.coeff((size_t)(d - j)) * Rat(t[(size_t)(k - j)]);
		} else {
			for (long j = 1; j <= d; j++)
				s -= minpoly_.coeff((size_t)(d - j)) * Rat(t[(size_t)(k - j)]);
		}
		if (s.get_den() != 1)
			fail(errc::usage, "non-integral trace");
		t.push_back(Int(s.get_num()));
	}
	return t[(size_t)i];
}

FieldElem::FieldElem(FieldPtr F_, std::vector<Rat> coords)
: F(std::move(F_))
, c(std::move(coords))
{
	c.resize((size_t)F->degree(), Rat(0));
}

FieldElem FieldElem::from_rat(FieldPtr F, const Rat &r)
{
	std::vector<Rat> c((size_t)F->degree(), Rat(0));
	c[0] = r;
	return FieldElem(std::move(F), std::move(c));
}

FieldElem FieldElem::theta(FieldPtr F)
{
	if (F->degree() == 1)
		return from_rat(F, -F->minpoly().coeff(0));
	std::vector<Rat> c((size_t)F->degree(), Rat(0));
	c[1] = Rat(1);
	return FieldElem(std::move(F), std::move(c));
}

bool FieldElem::is_zero() const
{
	for (const Rat &x : c)
		if (x != 0)
			return false;
	return true;
}

bool FieldElem::is_rational() const
{
	for (size_t i = 1; i < c.size(); i++)
		if (c[i] != 0)
			return false;
	return true;
}

Rat FieldElem::rational_value() const
{
	if (!is_rational())
		fail(errc::usage, "not a rational element");
	return c.empty() ? Rat(0) : c[0];
}

QPoly FieldElem::coord_poly() const
{
	return QPoly(c);
}

void FieldElem::check_same_field(const FieldElem &b) const
{
	if (F != b.F)
		fail(errc::field_mismatch, "elements of different number fields");
}

FieldElem operator+(const FieldElem &a, const FieldElem &b)
{
	a.check_same_field(b);
	std::vector<Rat> c(a.c);
	for (size_t i = 0; i < c.size(); i++)
		c[i] += b.c[i];
	return FieldElem(a.F, std::move(c));
}

FieldElem operator-(const FieldElem &a, const FieldElem &b)
{
	a.check_same_field(b);
	std::vector<Rat> c(a.c);
	for (size_t i = 0; i < c.size(); i++)
		c[i] -= b.c[i];
	return FieldElem(a.F, std::move(c));
}

FieldElem operator-(const FieldElem &a)
{
	std::vector<Rat> c(a.c);
	for (Rat &x : c)
		x = -x;
	return FieldElem(a.F, std::move(c));
}

FieldElem operator*(const FieldElem &a, const FieldElem &b)
{
	a.check_same_field(b);
	QPoly prod = a.coord_poly() * b.coord_poly();
	QPoly red = prod.mod(a.F->minpoly());
	std::vector<Rat> c(red.coeffs());
	return FieldElem(a.F, std::move(c));
}

FieldElem operator+(const FieldElem &a, const Rat &r)
{
	std::vector<Rat> c(a.c);
	c[0] += r;
	return FieldElem(a.F, std::move(c));
}

FieldElem operator-(const FieldElem &a, const Rat &r)
{
	return a + Rat(-r);
}

FieldElem operator*(const FieldElem &a, const Rat &r)
{
	std::vector<Rat> c(a.c);
	for (Rat &x : c)
		x *= r;
	return FieldElem(a.F, std::move(c));
}

bool operator==(const FieldElem &a, const FieldElem &b)
{
	return a.F == b.F && a.c == b.c;
}

FieldElem FieldElem::inverse() const
{
	if (is_zero())
		fail(errc::usage, "inverse of zero");
	/* extended Euclid: u*a + v*minpoly = gcd = const */
	QPoly r0 = F->minpoly(), r1 = coord_poly();
	QPoly s0(Rat(0)), s1(Rat(1)); /* coefficients of a */
	while (!r1.is_zero()) {
		auto [q, r] = r0.divmod(r1);
		QPoly s = s0 - q * s1;
		r0 = std::move(r1);
		r1 = std::move(r);
		s0 = std::move(s1);
		s1 = std::move(s);
	}
	if (r0.degree() != 0)
		fail(errc::usage, "element not invertible (reducible modulus?)");
	QPoly inv = (s0 * (Rat(1) / r0.coeff(0))).mod(F->minpoly());
	return FieldElem(F, inv.coeffs());
}

FieldElem FieldElem::pow(unsigned long e) const
{
	FieldElem r = from_rat(F, Rat(1));
	FieldElem b = *this;
	while (e) {
		if (e & 1)
			r = r * b;
		b = b * b;
		e >>= 1;
	}
	return r;
}

int FieldElem::sign() const
{
	if (is_zero())
		return 0;
	if (is_rational())
		return c[0] > 0 ? 1 : -1;
	/* irrational: refine until the enclosure excludes zero */
	for (unsigned long k = 32;; k *= 2) {
		QIval th = F->theta_bits(k);
		QIval v = coord_poly()(th);
		int s = v.certain_sign();
		if (s != 2)
			return s;
	}
}

QIval FieldElem::enclosure(const Rat &eps) const
{
	if (is_rational()) {
		Rat v = c.empty() ? Rat(0) : c[0];
		return {v, v};
	}
	for (unsigned long k = 32;; k *= 2) {
		QIval v = coord_poly()(F->theta_bits(k));
		if (v.width() <= eps)
			return v;
	}
}

Int FieldElem::floor() const
{
	if (is_rational())
		return floor_rat(rational_value());
	/* irrational value: floor(lo) and floor(hi) agree once the
	 * enclosure is narrow enough and avoids the integer inside */
	for (unsigned long k = 32;; k *= 2) {
		QIval v = coord_poly()(F->theta_bits(k));
		Int flo = floor_rat(v.lo), fhi = floor_rat(v.hi);
		if (flo == fhi)
			return flo;
	}
}

Int FieldElem::nint() const
{
	return (*this + Rat(1, 2)).floor();
}

Rat FieldElem::norm() const
{
	if (is_zero())
		return Rat(0);
	QPoly cp = coord_poly();
	if (cp.degree() == 0)
		return pow_rat(cp.coeff(0), (unsigned long)F->degree());
	return resultant(F->minpoly(), cp);
}

Rat FieldElem::trace() const
{
	Rat t(0);
	for (size_t i = 0; i < c.size(); i++)
		t += c[i] * Rat(F->trace_power(i));
	return t;
}

std::string FieldElem::str() const
{
	return coord_poly().str("theta");
}

std::optional<FieldElem> sqrt_in_field(const FieldPtr &F, const Int &u)
{
	if (u < 0)
		return std::nullopt;
	{
		Int r = isqrt(u);
		if (r * r == u)
			return FieldElem::from_rat(F, Rat(r));
	}
	long d = F->degree();
	if (d < 2)
		return std::nullopt;
	auto roots = F->minpoly().isolate_real_roots();
	if ((long)roots.size() != d)
		return std::nullopt; /* not totally real */
	for (unsigned long prec = 128; prec <= 1024; prec *= 2) {
		Rat eps = dyadic_eps(prec);
		std::vector<QIval> th;
		for (const QIval &iv : roots)
			th.push_back(F->minpoly().refine_root(iv, eps));
		/* sqrt(u) as an interval */
		Int scale = Int(1) << prec;
		Int lo = isqrt(u * scale * scale);
		QIval su(Rat(lo, scale), Rat(lo + 1, scale));
		/* try all sign assignments of sqrt(u) under the d real
		 * embeddings; solve the Vandermonde system in interval
		 * arithmetic and round to the simplest rationals */
		for (unsigned long mask = 0; mask < (1ul << d); mask++) {
			std::vector<std::vector<QIval>> M((size_t)d);
			std::vector<QIval> rhs((size_t)d);
			for (long j = 0; j < d; j++) {
				QIval p(Rat(1));
				for (long i = 0; i < d; i++) {
					M[(size_t)j].push_back(p);
					p = p * th[(size_t)j];
				}
				rhs[(size_t)j] = (mask >> j) & 1 ? -su : su;
			}
			/* Gaussian elimination over intervals */
			bool singular = false;
			for (long col = 0; col < d && !singular; col++) {
				long piv = -1;
				for (long r = col; r < d; r++)
					if (!M[(size_t)r][(size_t)col].contains_zero()) {
						piv = r;
						break;
					}
				if (piv < 0) {
					singular = true;
					break;
				}
				std::swap(M[(size_t)col], M[(size_t)piv]);
				std::swap(rhs[(size_t)col], rhs[(size_t)piv]);
				for (long r = 0; r < d; r++) {
					if (r == col)
						continue;
					QIval f = M[(size_t)r][(size_t)col] / M[(size_t)col][(size_t)col];
					for (long cc = col; cc < d; cc++)
						M[(size_t)r][(size_t)cc] =
						    M[(size_t)r][(size_t)cc] - f * M[(size_t)col][(size_t)cc];
					rhs[(size_t)r] = rhs[(size_t)r] - f * rhs[(size_t)col];
				}
			}
			if (singular)
				continue;
			std::vector<Rat> coords((size_t)d);
			for (long i = 0; i < d; i++) {
				QIval ci = rhs[(size_t)i] / M[(size_t)i][(size_t)i];
				coords[(size_t)i] = simplest_in(ci.lo, ci.hi);
			}
			FieldElem cand(F, coords);
			FieldElem sq = cand * cand;
			if (sq.is_rational() && sq.rational_value() == Rat(u)) {
				if (cand.sign() < 0)
					cand = -cand;
				return cand;
			}
		}
	}
	return std::nullopt;
}

}
