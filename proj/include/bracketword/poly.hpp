#pragma once

#include "interval.hpp"
#include "rational.hpp"

#include <string>
#include <vector>

namespace bw {

/* Univariate polynomial over Q, coefficients stored low to high with no
 * trailing zeros; the zero polynomial has an empty coefficient vector. */
class QPoly {
	std::vector<Rat> c_;

	void trim();

public:
	QPoly() = default;
	explicit QPoly(Rat constant);
	explicit QPoly(std::vector<Rat> coeffs);

	static QPoly x();
	/* coefficients given high to low, e.g. {1,0,-2} is x^2 - 2 */
	static QPoly from_desc(std::initializer_list<long> hi_to_lo);

	bool is_zero() const { return c_.empty(); }
	long degree() const { return (long)c_.size() - 1; } /* -1 for zero */
	const std::vector<Rat> &coeffs() const { return c_; }
	Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
	Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
	bool is_monic() const { return !c_.empty() && c_.back() == 1; }
	bool integer_coeffs() const;

	Rat operator()(const Rat &x) const;
	QIval operator()(const QIval &x) const;

	friend QPoly operator+(const QPoly &a, const QPoly &b);
	friend QPoly operator-(const QPoly &a, const QPoly &b);
	friend QPoly operator-(const QPoly &a);
	friend QPoly operator*(const QPoly &a, const QPoly &b);
	friend QPoly operator*(const QPoly &a, const Rat &s);
	friend bool operator==(const QPoly &a, const QPoly &b) = default;

	QPoly derivative() const;
	QPoly monic() const;

	/* Euclidean division: *this = q * d + r with deg r < deg d. */
	std::pair<QPoly, QPoly> divmod(const QPoly &d) const;
	QPoly mod(const QPoly &d) const { return divmod(d).second; }

	friend QPoly gcd(QPoly a, QPoly b); /* monic gcd */
	friend Rat resultant(const QPoly &a, const QPoly &b);

	/* Number of distinct real roots in (lo, hi], by Sturm's theorem. */
	long count_roots(const Rat &lo, const Rat &hi) const;
	long count_real_roots() const;

	/* A bound B with all real roots in [-B, B] (Cauchy bound). */
	Rat root_bound() const;

	/* Isolating intervals (one simple root each, endpoints non-roots)
	 * for all real roots, sorted; requires a squarefree polynomial. */
	std::vector<QIval> isolate_real_roots() const;

	/* Shrink an isolating interval of a simple root below `width` by
	 * bisection; p must change sign or vanish at an endpoint. */
	QIval refine_root(QIval iv, const Rat &width) const;

	/* Irreducibility over Q for monic integer polynomials: rational
	 * root test plus a bounded search over monic integer factors of
	 * degree <= deg/2 (complete; intended for small degrees). */
	bool irreducible() const;

	std::string str(const std::string &var = "x") const;
};

}
