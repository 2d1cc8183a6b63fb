#pragma once

#include <gmpxx.h>

#include <string>

namespace bw {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_rat(const Rat &x)
{
	Int q;
	mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
	return q;
}

inline Int ceil_rat(const Rat &x)
{
	Int q;
	mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
	return q;
}

/* nearest integer, halves rounded up: nint(x) = floor(x + 1/2) */
inline Int nint_rat(const Rat &x)
{
	return floor_rat(x + Rat(1, 2));
}

inline Rat frac_rat(const Rat &x)
{
	return x - Rat(floor_rat(x));
}

/* distance to the nearest integer */
inline Rat dist_rat(const Rat &x)
{
	Rat d = x - Rat(nint_rat(x));
	return d < 0 ? Rat(-d) : d;
}

inline Int isqrt(const Int &n)
{
	Int r;
	mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
	return r;
}

inline Rat pow_rat(Rat base, unsigned long e)
{
	Rat r(1);
	while (e) {
		if (e & 1)
			r *= base;
		base *= base;
		e >>= 1;
	}
	return r;
}

inline Int pow_int(Int base, unsigned long e)
{
	Int r;
	mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
	return r;
}

/* 2^-k as a rational */
inline Rat dyadic_eps(unsigned long k)
{
	Int d = 1;
	d <<= k;
	return Rat(Int(1), d);
}

/* The rational with the smallest denominator (ties: smallest numerator)
 * in the closed interval [lo, hi]; the classic Stern-Brocot walk. */
Rat simplest_in(const Rat &lo, const Rat &hi);

std::string to_string(const Rat &x);
std::string to_string(const Int &x);

/* Parse "p/q" or "p" (no whitespace); throws bw::error(syntax_error). */
Rat parse_rat(const std::string &s);

}
