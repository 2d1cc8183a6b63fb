#include "bracketword/rational.hpp"
#include "bracketword/errors.hpp"

namespace bw {

Rat simplest_in(const Rat &lo, const Rat &hi)
{
	if (lo > hi)
		fail(errc::usage, "simplest_in: empty interval");
	if (lo == hi)
		return lo;
	if (lo <= 0 && 0 <= hi)
		return Rat(0);
	if (hi < 0)
		return -simplest_in(-hi, -lo);
	/* now 0 < lo < hi; walk the continued fraction of the interval */
	Int a = floor_rat(lo);
	if (Rat(a + 1) <= hi)
		return lo <= Rat(a) ? Rat(a) : Rat(a + 1);
	Rat flo = lo - Rat(a);
	if (flo == 0)
		return Rat(a);
	Rat fhi = hi - Rat(a);
	/* recurse on reciprocals: simplest in [1/fhi, 1/flo] */
	Rat inner = simplest_in(Rat(1) / fhi, Rat(1) / flo);
	return Rat(a) + Rat(1) / inner;
}

std::string to_string(const Rat &x)
{
	return x.get_str();
}

std::string to_string(const Int &x)
{
	return x.get_str();
}

Rat parse_rat(const std::string &s)
{
	if (s.empty())
		fail(errc::syntax_error, "empty rational");
	for (size_t i = 0; i < s.size(); i++) {
		char ch = s[i];
		bool ok = (ch >= '0' && ch <= '9') || ch == '/' ||
		          ((ch == '-' || ch == '+') && i == 0);
		if (!ok)
			fail(errc::syntax_error, "bad rational: " + s);
	}
	Rat r;
	if (r.set_str(s, 10) != 0)
		fail(errc::syntax_error, "bad rational: " + s);
	if (r.get_den() == 0)
		fail(errc::syntax_error, "zero denominator: " + s);
	r.canonicalize();
	return r;
}

}
