#include "bracketword/pisot.hpp"
#include "bracketword/errors.hpp"
#include <cmath>

namespace bw {

PisotPtr make_pisot_unit(const Int &a, const Int &b)
{
	QPoly p(std::vector<Rat>{Rat(-1), Rat(-b), Rat(-a), Rat(1)});
	if (!p.irreducible())
		fail(errc::reducible, "x^3 - " + to_string(a) + "x^2 - " +
		                          to_string(b) + "x - 1 is reducible");
	Int disc = -4 * a * a * a + a * a * b * b - 18 * a * b + 4 * b * b * b - 27;
	if (disc >= 0)
		fail(errc::not_pisot, "discriminant " + to_string(disc) +
		                          " is not negative");
	auto roots = p.isolate_real_roots();
	if (roots.size() != 1)
		fail(errc::not_pisot, "expected a single real root");
	QIval iv = p.refine_root(roots[0], Rat(1, 1024));
	if (!(iv.lo > 1))
		fail(errc::not_pisot, "real root is not greater than 1");

	auto P = std::make_shared<CubicPisotUnit>();
	P->a = a;
	P->b = b;
	P->disc = disc;
	P->field = NumberField::define(p, iv.lo, iv.hi);
	P->beta = FieldElem::theta(P->field);
	P->inv_beta = P->beta * P->beta - P->beta * Rat(a) - Rat(b);
	FieldElem denom =
	    P->beta * P->beta * Rat(2) - P->beta * Rat(a) + P->inv_beta;
	if (denom.is_zero())
		fail(errc::not_pisot, "degenerate decomposition denominator");
	P->inv_denom = denom.inverse();
	P->trace1 = a;
	P->trace2 = a * a + 2 * b;

	/* exception table: nint(beta^i) for all powers up to the bound */
	P->exception_bound = 1000;
	FieldElem pw = FieldElem::from_rat(P->field, Rat(1));
	for (;;) {
		Int m = pw.nint();
		if (m > P->exception_bound)
			break;
		P->exceptions.insert(m);
		pw = pw * P->beta;
	}
	return P;
}

GhhDecomposition solve_ghh(const PisotPtr &P, const Int &n)
{
	FieldElem bn = P->beta * Rat(n);
	FieldElem b2n = P->beta * P->beta * Rat(n);
	Rat rbn(bn.nint()), rb2n(b2n.nint());
	/* Cramer's rule on the defining linear system; the conjugate pair
	 * enters only through its sum a - beta and product 1/beta */
	FieldElem num = P->inv_beta * Rat(n) -
	                (FieldElem::from_rat(P->field, Rat(P->a)) - P->beta) * rbn +
	                FieldElem::from_rat(P->field, rb2n);
	GhhDecomposition d;
	d.n = n;
	d.g = num * P->inv_denom;
	d.u = d.g.c[0];
	d.v = d.g.c[1];
	d.w = d.g.c[2];
	d.trace = 3 * d.u + d.v * Rat(P->trace1) + d.w * Rat(P->trace2);
	return d;
}

bool membership_test(const PisotPtr &P, const Int &n)
{
	if (n <= 0)
		return false;
	if (n <= P->exception_bound)
		return P->exceptions.count(n) != 0;
	GhhDecomposition d = solve_ghh(P, n);
	/* integrality in Z[beta] */
	if (d.u.get_den() != 1 || d.v.get_den() != 1 || d.w.get_den() != 1)
		return false;
	if (d.g.norm() != 1)
		return false;
	/* n - 1 <= g(n) < n + 1 */
	if ((d.g - Rat(n - 1)).sign() < 0)
		return false;
	if ((d.g - Rat(n + 1)).sign() >= 0)
		return false;
	/* a unit in the window need not be a beta power when beta is not
	 * fundamental; confirm against the unique geometric candidate */
	double bd = P->field->theta_bits(32).mid().get_d();
	double id = std::log(Rat(n).get_d()) / std::log(bd);
	long i0 = std::lround(id);
	for (long i = std::max(0L, i0 - 1); i <= i0 + 1; i++)
		if (d.g == P->beta.pow((unsigned long)i))
			return true;
	return false;
}

std::vector<Int> trace_sequence(const PisotPtr &P, size_t count)
{
	std::vector<Int> t;
	if (count > 0)
		t.push_back(3);
	if (count > 1)
		t.push_back(P->a);
	if (count > 2)
		t.push_back(P->a * P->a + 2 * P->b);
	while (t.size() < count) {
		size_t i = t.size();
		t.push_back(P->a * t[i - 1] + P->b * t[i - 2] + t[i - 3]);
	}
	return t;
}

WordPtr power_word(const PisotPtr &P)
{
	auto alpha = std::make_shared<Alphabet>();
	alpha->intern("0");
	alpha->intern("1");
	return std::make_shared<Word>(alpha, [P](size_t n) {
		return (Symbol)(membership_test(P, Int((unsigned long)n)) ? 1 : 0);
	});
}

}
