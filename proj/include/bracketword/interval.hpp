#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cassert>

namespace bw {

/* Closed interval with rational endpoints. */
struct QIval {
	Rat lo, hi;

	QIval() = default;

	QIval(Rat v)
	: lo(v)
	, hi(std::move(v))
	{}

	QIval(Rat lo, Rat hi)
	: lo(std::move(lo))
	, hi(std::move(hi))
	{
		assert(this->lo <= this->hi);
	}

	Rat width() const { return hi - lo; }
	Rat mid() const { return (lo + hi) / 2; }

	bool contains(const Rat &v) const { return lo <= v && v <= hi; }
	bool contains(const QIval &o) const { return lo <= o.lo && o.hi <= hi; }
	bool contains_zero() const { return lo <= 0 && 0 <= hi; }

	/* sign if determined, 0 only when the interval is exactly {0};
	 * indeterminate intervals report 2 */
	int certain_sign() const
	{
		if (lo > 0)
			return 1;
		if (hi < 0)
			return -1;
		if (lo == 0 && hi == 0)
			return 0;
		return 2;
	}

	friend QIval operator+(const QIval &a, const QIval &b)
	{
		return {a.lo + b.lo, a.hi + b.hi};
	}

	friend QIval operator-(const QIval &a, const QIval &b)
	{
		return {a.lo - b.hi, a.hi - b.lo};
	}

	friend QIval operator-(const QIval &a) { return {-a.hi, -a.lo}; }

	friend QIval operator*(const QIval &a, const QIval &b)
	{
		Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi;
		Rat p3 = a.hi * b.lo, p4 = a.hi * b.hi;
		return {std::min(std::min(p1, p2), std::min(p3, p4)),
		        std::max(std::max(p1, p2), std::max(p3, p4))};
	}

	friend QIval operator*(const QIval &a, const Rat &s)
	{
		return s >= 0 ? QIval{a.lo * s, a.hi * s} : QIval{a.hi * s, a.lo * s};
	}

	friend QIval operator+(const QIval &a, const Rat &s)
	{
		return {a.lo + s, a.hi + s};
	}

	/* reciprocal; caller must ensure 0 is excluded */
	QIval recip() const
	{
		assert(!contains_zero());
		return {Rat(1) / hi, Rat(1) / lo};
	}

	friend QIval operator/(const QIval &a, const QIval &b)
	{
		return a * b.recip();
	}

	friend QIval intersect(const QIval &a, const QIval &b)
	{
		return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
	}
};

}
