#pragma once

#include "words.hpp"

#include <set>

namespace bw {

/* A cubic Pisot unit: real root beta > 1 of x^3 - a x^2 - b x - 1 with a
 * pair of complex conjugate Galois roots (discriminant < 0).  The ring of
 * integers is taken to be Z[beta]. */
struct CubicPisotUnit {
	Int a, b;
	Int disc; /* -4a^3 + a^2 b^2 - 18ab + 4b^3 - 27 */
	FieldPtr field;
	FieldElem beta;
	FieldElem inv_beta;   /* beta^2 - a beta - b */
	FieldElem inv_denom;  /* (2 beta^2 - a beta + 1/beta)^{-1} */
	Int trace1, trace2;   /* Tr(beta) = a, Tr(beta^2) = a^2 + 2b */
	/* nint(beta^i) for every power not exceeding the exception bound;
	 * the algebraic membership test only applies above it */
	std::set<Int> exceptions;
	Int exception_bound;
};

using PisotPtr = std::shared_ptr<const CubicPisotUnit>;

PisotPtr make_pisot_unit(const Int &a, const Int &b);

struct GhhDecomposition {
	Int n;
	FieldElem g;    /* the dominant branch, an element of K */
	Rat u, v, w;    /* g = u + v beta + w beta^2 */
	Rat trace;      /* 3u + v Tr(beta) + w Tr(beta^2); equals n */
};

GhhDecomposition solve_ghh(const PisotPtr &P, const Int &n);

bool membership_test(const PisotPtr &P, const Int &n);

std::vector<Int> trace_sequence(const PisotPtr &P, size_t count);

/* Indicator word of E = {nint(beta^i) : i >= 0}. */
WordPtr power_word(const PisotPtr &P);

}
