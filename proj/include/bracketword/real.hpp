#pragma once

#include "field.hpp"
#include "interval.hpp"

#include <functional>
#include <map>
#include <memory>
#include <variant>
#include <vector>

namespace bw {

/* Default refinement cap for effective reals, in bits.  Hitting the cap
 * raises PrecisionExhausted; we never guess. */
constexpr unsigned long kPrecisionCap = 4096;

/* An effective real: a pure refiner producing an enclosure of width
 * <= 2^-k at depth k.  Results are memoized and intersected with
 * coarser depths so the published intervals are always nested. */
class Effective {
	struct State {
		std::function<QIval(unsigned long)> refine;
		unsigned long cap;
		std::map<unsigned long, QIval> cache;
		std::mutex mu;
	};
	std::shared_ptr<State> st_;

public:
	Effective() = default;
	Effective(std::function<QIval(unsigned long)> refine,
	          unsigned long cap = kPrecisionCap);

	bool valid() const { return (bool)st_; }
	unsigned long cap() const { return st_->cap; }

	/* Nested enclosure of width <= 2^-k; throws PrecisionExhausted
	 * when k exceeds the cap. */
	QIval interval(unsigned long k) const;
};

/* An exact real: rational, number-field element, or effective real. */
class RealValue {
	std::variant<Rat, FieldElem, Effective> v_;

public:
	RealValue()
	: v_(Rat(0))
	{}
	RealValue(Rat r)
	: v_(std::move(r))
	{}
	RealValue(FieldElem e)
	: v_(std::move(e))
	{}
	RealValue(Effective e)
	: v_(std::move(e))
	{}
	RealValue(long n)
	: v_(Rat(n))
	{}
	RealValue(Int n)
	: v_(Rat(std::move(n)))
	{}

	bool is_rational() const;
	bool is_field_elem() const { return std::holds_alternative<FieldElem>(v_); }
	bool is_effective() const { return std::holds_alternative<Effective>(v_); }

	/* Requires a rational payload (or a rational-valued FieldElem). */
	Rat rational_value() const;
	const FieldElem &field_elem() const { return std::get<FieldElem>(v_); }
	const Effective &effective() const { return std::get<Effective>(v_); }

	/* The field this value lives in, if any. */
	FieldPtr field() const;

	friend RealValue operator+(const RealValue &a, const RealValue &b);
	friend RealValue operator-(const RealValue &a, const RealValue &b);
	friend RealValue operator*(const RealValue &a, const RealValue &b);
	friend RealValue operator-(const RealValue &a);

	/* Exact sign; PrecisionExhausted if an effective value straddles
	 * zero at the cap. */
	int sign() const;
	Int floor_exact() const;
	Int ceil_exact() const { return -((-*this).floor_exact()); }
	Int nint_exact() const { return (*this + RealValue(Rat(1, 2))).floor_exact(); }
	RealValue frac() const { return *this - RealValue(Rat(floor_exact())); }
	RealValue dist() const;

	bool equals(const RealValue &b) const { return (*this - b).sign() == 0; }
	bool less_than(const RealValue &b) const { return (*this - b).sign() < 0; }

	/* Enclosure of width <= 2^-k. */
	QIval enclosure_bits(unsigned long k) const;

	std::string str() const;
};

/* Demotes any exact real to its effective-interval presentation; used
 * to combine values from unrelated number fields. */
RealValue to_effective(const RealValue &x);

/* pi as an effective real (MPFR under the hood). */
RealValue pi_value();

/* sqrt(u) for non-negative integer u: exact in `ambient` when the field
 * contains it, otherwise an element of a fresh Q(sqrt(u)).  Throws
 * UnknownConstant when ambient is given but lacks the root. */
RealValue sqrt_value(const Int &u, const FieldPtr &ambient = nullptr);

/* The golden ratio (1+sqrt(5))/2, in `ambient` when possible. */
RealValue phi_value(const FieldPtr &ambient = nullptr);

/* The alpha of the nested-interval construction: an irrational with
 * ||N_i a|| <= eps_i for every i.  Validates N_{i+1} >= 2 N_i / eps_i. */
RealValue construct_nested_real(const std::vector<Int> &Ns,
                                const std::vector<Rat> &eps);

}
