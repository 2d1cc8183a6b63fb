#include "bracketword/real.hpp"
#include "bracketword/errors.hpp"

#include <mpfr.h>

namespace bw {

Effective::Effective(std::function<QIval(unsigned long)> refine, unsigned long cap)
: st_(std::make_shared<State>())
{
	st_->refine = std::move(refine);
	st_->cap = cap;
}

QIval Effective::interval(unsigned long k) const
{
	if (k > st_->cap)
		fail(errc::precision_exhausted,
		     "effective real refined past " + std::to_string(st_->cap) + " bits");
	std::lock_guard<std::mutex> lock(st_->mu);
	auto it = st_->cache.find(k);
	if (it != st_->cache.end())
		return it->second;
	QIval iv = st_->refine(k);
	/* intersect with every cached coarser depth so enclosures nest */
	for (auto &[d, cached] : st_->cache)
		if (d < k)
			iv = intersect(iv, cached);
	st_->cache.emplace(k, iv);
	return iv;
}

bool RealValue::is_rational() const
{
	if (std::holds_alternative<Rat>(v_))
		return true;
	if (std::holds_alternative<FieldElem>(v_))
		return std::get<FieldElem>(v_).is_rational();
	return false;
}

Rat RealValue::rational_value() const
{
	if (std::holds_alternative<Rat>(v_))
		return std::get<Rat>(v_);
	if (std::holds_alternative<FieldElem>(v_))
		return std::get<FieldElem>(v_).rational_value();
	fail(errc::usage, "effective real has no exact rational value");
}

FieldPtr RealValue::field() const
{
	if (std::holds_alternative<FieldElem>(v_))
		return std::get<FieldElem>(v_).F;
	return nullptr;
}

QIval RealValue::enclosure_bits(unsigned long k) const
{
	if (std::holds_alternative<Rat>(v_)) {
		const Rat &r = std::get<Rat>(v_);
		return {r, r};
	}
	if (std::holds_alternative<FieldElem>(v_))
		return std::get<FieldElem>(v_).enclosure(dyadic_eps(k));
	return std::get<Effective>(v_).interval(k);
}

namespace {

Effective as_effective(const RealValue &x)
{
	if (x.is_effective())
		return x.effective();
	RealValue copy = x;
	return Effective([copy](unsigned long k) { return copy.enclosure_bits(k); });
}

Effective effective_add(const RealValue &a, const RealValue &b, bool sub)
{
	Effective ea = as_effective(a), eb = as_effective(b);
	unsigned long cap = std::min(ea.cap(), eb.cap());
	return Effective(
	    [ea, eb, sub](unsigned long k) {
		    QIval x = ea.interval(k + 1), y = eb.interval(k + 1);
		    return sub ? x - y : x + y;
	    },
	    cap);
}

Effective effective_mul(const RealValue &a, const RealValue &b)
{
	Effective ea = as_effective(a), eb = as_effective(b);
	unsigned long cap = std::min(ea.cap(), eb.cap());
	return Effective(
	    [ea, eb, cap](unsigned long k) {
		    Rat target = dyadic_eps(k);
		    for (unsigned long j = k + 2;; j = j + j / 2 + 1) {
			    if (j > cap)
				    fail(errc::precision_exhausted,
				         "product refinement exceeded the precision cap");
			    QIval p = ea.interval(j) * eb.interval(j);
			    if (p.width() <= target)
				    return p;
		    }
	    },
	    cap);
}

}

RealValue operator+(const RealValue &a, const RealValue &b)
{
	if (a.is_effective() || b.is_effective())
		return RealValue(effective_add(a, b, false));
	FieldPtr Fa = a.field(), Fb = b.field();
	if (Fa && Fb) {
		if (Fa != Fb)
			fail(errc::field_mismatch, "operands live in different fields");
		return RealValue(a.field_elem() + b.field_elem());
	}
	if (Fa)
		return RealValue(a.field_elem() + b.rational_value());
	if (Fb)
		return RealValue(b.field_elem() + a.rational_value());
	return RealValue(a.rational_value() + b.rational_value());
}

RealValue operator-(const RealValue &a, const RealValue &b)
{
	if (a.is_effective() || b.is_effective())
		return RealValue(effective_add(a, b, true));
	return a + (-b);
}

RealValue operator-(const RealValue &a)
{
	if (a.is_effective()) {
		Effective e = a.effective();
		return RealValue(Effective(
		    [e](unsigned long k) { return -e.interval(k); }, e.cap()));
	}
	if (a.field())
		return RealValue(-a.field_elem());
	return RealValue(Rat(-a.rational_value()));
}

RealValue operator*(const RealValue &a, const RealValue &b)
{
	if (a.is_effective() || b.is_effective())
		return RealValue(effective_mul(a, b));
	FieldPtr Fa = a.field(), Fb = b.field();
	if (Fa && Fb) {
		if (Fa != Fb)
			fail(errc::field_mismatch, "operands live in different fields");
		return RealValue(a.field_elem() * b.field_elem());
	}
	if (Fa)
		return RealValue(a.field_elem() * b.rational_value());
	if (Fb)
		return RealValue(b.field_elem() * a.rational_value());
	return RealValue(a.rational_value() * b.rational_value());
}

RealValue to_effective(const RealValue &x)
{
	return RealValue(as_effective(x));
}

int RealValue::sign() const
{
	if (std::holds_alternative<Rat>(v_)) {
		const Rat &r = std::get<Rat>(v_);
		return r > 0 ? 1 : r < 0 ? -1 : 0;
	}
	if (std::holds_alternative<FieldElem>(v_))
		return std::get<FieldElem>(v_).sign();
	const Effective &e = std::get<Effective>(v_);
	for (unsigned long k = 4;; k *= 2) {
		if (k > e.cap())
			k = e.cap();
		int s = e.interval(k).certain_sign();
		if (s != 2)
			return s;
		if (k == e.cap())
			fail(errc::precision_exhausted,
			     "sign undecided at the precision cap");
	}
}

Int RealValue::floor_exact() const
{
	if (std::holds_alternative<Rat>(v_))
		return floor_rat(std::get<Rat>(v_));
	if (std::holds_alternative<FieldElem>(v_))
		return std::get<FieldElem>(v_).floor();
	const Effective &e = std::get<Effective>(v_);
	for (unsigned long k = 4;; k *= 2) {
		if (k > e.cap())
			k = e.cap();
		QIval iv = e.interval(k);
		Int flo = floor_rat(iv.lo), fhi = floor_rat(iv.hi);
		if (flo == fhi)
			return flo;
		if (k == e.cap())
			fail(errc::precision_exhausted,
			     "floor undecided at the precision cap");
	}
}

RealValue RealValue::dist() const
{
	Int m = nint_exact();
	RealValue d = *this - RealValue(Rat(m));
	return d.sign() < 0 ? -d : d;
}

std::string RealValue::str() const
{
	if (std::holds_alternative<Rat>(v_))
		return to_string(std::get<Rat>(v_));
	if (std::holds_alternative<FieldElem>(v_))
		return std::get<FieldElem>(v_).str();
	QIval iv = std::get<Effective>(v_).interval(16);
	return "~[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
}

namespace {

Rat mpfr_to_rat(const mpfr_t x)
{
	mpq_t q;
	mpq_init(q);
	mpfr_get_q(q, x);
	Rat r(q);
	mpq_clear(q);
	return r;
}

}

RealValue pi_value()
{
	return RealValue(Effective([](unsigned long k) {
		mpfr_t lo, hi;
		mpfr_init2(lo, k + 8);
		mpfr_init2(hi, k + 8);
		mpfr_const_pi(lo, MPFR_RNDD);
		mpfr_const_pi(hi, MPFR_RNDU);
		QIval iv(mpfr_to_rat(lo), mpfr_to_rat(hi));
		mpfr_clear(lo);
		mpfr_clear(hi);
		return iv;
	}));
}

RealValue sqrt_value(const Int &u, const FieldPtr &ambient)
{
	if (u < 0)
		fail(errc::usage, "sqrt of a negative integer");
	Int r = isqrt(u);
	if (r * r == u)
		return RealValue(Rat(r));
	if (ambient) {
		auto c = sqrt_in_field(ambient, u);
		if (!c)
			fail(errc::unknown_constant,
			     "sqrt(" + to_string(u) + ") is not in the declared field");
		return RealValue(*c);
	}
	QPoly p(std::vector<Rat>{Rat(-u), Rat(0), Rat(1)});
	FieldPtr F = NumberField::define(p, Rat(r), Rat(r + 1));
	return RealValue(FieldElem::theta(F));
}

RealValue phi_value(const FieldPtr &ambient)
{
	if (ambient) {
		auto c = sqrt_in_field(ambient, Int(5));
		if (!c)
			fail(errc::unknown_constant, "phi is not in the declared field");
		return RealValue((*c + Rat(1)) * Rat(1, 2));
	}
	QPoly p(std::vector<Rat>{Rat(-1), Rat(-1), Rat(1)});
	FieldPtr F = NumberField::define(p, Rat(1), Rat(2));
	return RealValue(FieldElem::theta(F));
}

RealValue construct_nested_real(const std::vector<Int> &Ns, const std::vector<Rat> &eps)
{
	if (Ns.empty() || Ns.size() != eps.size())
		fail(errc::usage, "need matching nonempty N and eps sequences");
	for (size_t i = 0; i < Ns.size(); i++) {
		if (Ns[i] <= 0 || (i > 0 && Ns[i] <= Ns[i - 1]))
			fail(errc::hypothesis_violated, "N sequence must be positive increasing");
		if (eps[i] <= 0 || eps[i] >= 1)
			fail(errc::hypothesis_violated, "eps values must lie in (0,1)");
	}
	for (size_t i = 0; i + 1 < Ns.size(); i++)
		if (Rat(Ns[i + 1]) * eps[i] < 2 * Rat(Ns[i]))
			fail(errc::hypothesis_violated,
			     "growth condition N_{i+1} >= 2 N_i / eps_i fails at i=" +
			         std::to_string(i));
	/* walk the nested-interval construction: at each stage pick the
	 * integer multiple of 1/N_j nearest the current midpoint */
	QIval cur((Rat(1) - eps[0]) / Rat(Ns[0]), (Rat(1) + eps[0]) / Rat(Ns[0]));
	for (size_t j = 1; j < Ns.size(); j++) {
		Int m = nint_rat(Rat(Ns[j]) * cur.mid());
		QIval next((Rat(m) - eps[j]) / Rat(Ns[j]), (Rat(m) + eps[j]) / Rat(Ns[j]));
		cur = intersect(next, cur);
	}
	/* pick a point where no N_i * alpha lands exactly on a half-integer,
	 * so downstream effective floor/sign tests always resolve */
	Rat c = cur.mid();
	for (unsigned long q = 2;; q++) {
		c = cur.lo + cur.width() / Rat((long)q);
		bool ok = true;
		for (const Int &N : Ns) {
			Rat v = Rat(N) * c * 2;
			if (v.get_den() == 1) {
				ok = false;
				break;
			}
		}
		if (ok)
			break;
	}
	Rat base = std::min(c - cur.lo, cur.hi - c) / 2;
	return RealValue(Effective([c, base](unsigned long k) {
		Rat d = dyadic_eps(k + 1);
		if (base < d)
			d = base;
		return QIval(c - d, c + d);
	}));
}

}
