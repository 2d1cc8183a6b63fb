#pragma once

#include "interval.hpp"
#include "poly.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace bw {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/* A real algebraic number field Q(theta): monic irreducible integer
 * minimal polynomial plus an isolating interval pinning down which real
 * root theta is.  The interval refinement is memoized and monotone. */
class NumberField {
	QPoly minpoly_;
	mutable QIval iso_;
	mutable std::mutex mu_;

	NumberField(QPoly p, QIval iso)
	: minpoly_(std::move(p))
	, iso_(std::move(iso))
	{}

public:
	/* Validates: monic, integer coefficients, irreducible, interval
	 * isolates exactly one real root.  Throws Reducible / NoRoot /
	 * MultipleRoots. */
	static FieldPtr define(const QPoly &minpoly, const Rat &lo, const Rat &hi);

	const QPoly &minpoly() const { return minpoly_; }
	long degree() const { return minpoly_.degree(); }

	/* Isolating interval refined to width <= eps. */
	QIval theta(const Rat &eps) const;
	QIval theta_bits(unsigned long k) const { return theta(dyadic_eps(k)); }

	/* Trace of theta^i over Q (Newton's identities + recurrence). */
	Int trace_power(unsigned long i) const;
};

/* An element of a number field, as rational coordinates in the power
 * basis 1, theta, ..., theta^(d-1). */
struct FieldElem {
	FieldPtr F;
	std::vector<Rat> c;

	FieldElem() = default;
	FieldElem(FieldPtr F, std::vector<Rat> coords);
	static FieldElem from_rat(FieldPtr F, const Rat &r);
	static FieldElem theta(FieldPtr F); /* the generator */

	bool is_zero() const;
	bool is_rational() const;
	Rat rational_value() const; /* requires is_rational() */
	QPoly coord_poly() const;

	friend FieldElem operator+(const FieldElem &a, const FieldElem &b);
	friend FieldElem operator-(const FieldElem &a, const FieldElem &b);
	friend FieldElem operator-(const FieldElem &a);
	friend FieldElem operator*(const FieldElem &a, const FieldElem &b);
	friend FieldElem operator+(const FieldElem &a, const Rat &r);
	friend FieldElem operator-(const FieldElem &a, const Rat &r);
	friend FieldElem operator*(const FieldElem &a, const Rat &r);
	friend bool operator==(const FieldElem &a, const FieldElem &b);

	FieldElem inverse() const; /* extended Euclid mod minpoly */
	FieldElem pow(unsigned long e) const;

	/* Exact sign: zero test on coordinates, otherwise certified by
	 * interval refinement of theta (always terminates). */
	int sign() const;
	Int floor() const;
	Int nint() const; /* floor(x + 1/2) */

	/* Field norm N_{K/Q} = resultant(minpoly, coord_poly) for monic
	 * minpoly. */
	Rat norm() const;
	Rat trace() const;

	/* Enclosing interval of width <= eps. */
	QIval enclosure(const Rat &eps) const;

	std::string str() const;

private:
	void check_same_field(const FieldElem &b) const;
};

/* Finds c in F with c^2 = u and c > 0, as exact coordinates, when F is
 * totally real and contains sqrt(u); nullopt otherwise. */
std::optional<FieldElem> sqrt_in_field(const FieldPtr &F, const Int &u);

}
