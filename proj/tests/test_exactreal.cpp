#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracketword/errors.hpp"
#include "bracketword/field.hpp"
#include "bracketword/real.hpp"

using namespace bw;

static FieldPtr q_sqrt2()
{
	return NumberField::define(QPoly::from_desc({1, 0, -2}), Rat(1), Rat(2));
}

static FieldPtr compositum()
{
	/* Q(sqrt2 + sqrt3) */
	return NumberField::define(QPoly::from_desc({1, 0, -10, 0, 1}), Rat(3), Rat(4));
}

TEST_CASE("rational helpers")
{
	CHECK(floor_rat(Rat(-1, 2)) == -1);
	CHECK(ceil_rat(Rat(-1, 2)) == 0);
	CHECK(nint_rat(Rat(1, 2)) == 1);
	CHECK(nint_rat(Rat(-1, 2)) == 0);
	CHECK(frac_rat(Rat(-1, 4)) == Rat(3, 4));
	CHECK(dist_rat(Rat(7, 3)) == Rat(1, 3));
	CHECK(simplest_in(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
	CHECK(simplest_in(Rat(27, 100), Rat(34, 100)) == Rat(1, 3));
	CHECK(simplest_in(Rat(2), Rat(3)) == Rat(2));
	CHECK(simplest_in(Rat(-1, 2), Rat(1, 2)) == Rat(0));
	CHECK(parse_rat("-3/4") == Rat(-3, 4));
	CHECK_THROWS_AS(parse_rat("1.5"), error);
}

TEST_CASE("polynomial basics")
{
	QPoly p = QPoly::from_desc({1, 0, -2});
	CHECK(p.degree() == 2);
	CHECK(p(Rat(2)) == Rat(2));
	CHECK(p.count_real_roots() == 2);
	CHECK(p.count_roots(Rat(1), Rat(2)) == 1);
	CHECK(p.irreducible());
	CHECK_FALSE(QPoly::from_desc({1, 0, -1}).irreducible());
	CHECK_FALSE(QPoly::from_desc({1, 0, -4}).irreducible());
	CHECK(QPoly::from_desc({1, 0, 0, -2}).irreducible());
	CHECK(QPoly::from_desc({1, 0, -10, 0, 1}).irreducible());

	QPoly q = QPoly::from_desc({1, -1, -1});
	auto [quo, rem] = (p * q).divmod(q);
	CHECK(quo == p);
	CHECK(rem.is_zero());

	auto roots = QPoly::from_desc({1, 0, -2, 0}).isolate_real_roots();
	REQUIRE(roots.size() == 3);
	CHECK(roots[0].hi < roots[1].lo);
	CHECK(roots[1].contains(Rat(0)));
}

TEST_CASE("resultant")
{
	QPoly p = QPoly::from_desc({1, 0, -2});
	CHECK(resultant(p, QPoly::x()) == Rat(-2));
	CHECK(resultant(p, QPoly(std::vector<Rat>{Rat(0), Rat(1)})) == Rat(-2));
	CHECK(resultant(QPoly::from_desc({1, 0, -10, 0, 1}), QPoly::x()) == Rat(1));
}

TEST_CASE("field validation")
{
	CHECK_THROWS_WITH_AS(
	    (void)NumberField::define(QPoly::from_desc({1, 0, -1}), Rat(0), Rat(2)),
	    doctest::Contains("reducible"), error);
	CHECK_THROWS_AS(
	    (void)NumberField::define(QPoly::from_desc({1, 0, -2}), Rat(2), Rat(3)),
	    error);
	CHECK_THROWS_AS(
	    (void)NumberField::define(QPoly::from_desc({1, 0, -2}), Rat(-2), Rat(2)),
	    error);
	/* degree 1 with a degenerate interval is fine */
	FieldPtr Q = NumberField::define(QPoly::from_desc({1, -2}), Rat(2), Rat(2));
	CHECK(FieldElem::theta(Q).rational_value() == Rat(2));
}

TEST_CASE("Q(sqrt2) arithmetic")
{
	FieldPtr F = q_sqrt2();
	FieldElem s2 = FieldElem::theta(F);
	CHECK((s2 * s2).rational_value() == Rat(2));
	CHECK(s2.sign() == 1);
	CHECK((s2 - Rat(3, 2)).sign() == -1);
	CHECK((s2 * Rat(5)).floor() == 7);
	CHECK(s2.norm() == Rat(-2));
	CHECK(s2.inverse() == s2 * Rat(1, 2));
	CHECK(s2.pow(10).rational_value() == Rat(32));
}

TEST_CASE("golden ratio")
{
	RealValue phi = phi_value();
	RealValue zero = phi * phi - phi - RealValue(Rat(1));
	CHECK(zero.sign() == 0);
	CHECK((phi * RealValue(Rat(4))).floor_exact() == 6);
	FieldPtr F = phi.field();
	/* trace of phi^i is the Lucas sequence */
	CHECK(F->trace_power(0) == 2);
	CHECK(F->trace_power(1) == 1);
	CHECK(F->trace_power(2) == 3);
	CHECK(F->trace_power(5) == 11);
	CHECK(F->trace_power(10) == 123);
}

TEST_CASE("compositum embeddings")
{
	FieldPtr K = compositum();
	FieldElem th = FieldElem::theta(K);
	/* sqrt2 = (theta^3 - 9 theta)/2, sqrt3 = (11 theta - theta^3)/2 */
	FieldElem s2 = (th.pow(3) - th * Rat(9)) * Rat(1, 2);
	FieldElem s3 = (th * Rat(11) - th.pow(3)) * Rat(1, 2);
	CHECK((s2 * s2).rational_value() == Rat(2));
	CHECK((s3 * s3).rational_value() == Rat(3));
	CHECK(s2 + s3 == th);
	CHECK(s2.sign() == 1);
	CHECK(s3.sign() == 1);

	auto r2 = sqrt_in_field(K, Int(2));
	REQUIRE(r2.has_value());
	CHECK(*r2 == s2);
	auto r3 = sqrt_in_field(K, Int(3));
	REQUIRE(r3.has_value());
	CHECK(*r3 == s3);
	auto r6 = sqrt_in_field(K, Int(6));
	REQUIRE(r6.has_value());
	CHECK((*r6 * *r6).rational_value() == Rat(6));
	CHECK(r6->sign() == 1);
	CHECK(*r2 * *r3 == *r6);
	CHECK_FALSE(sqrt_in_field(K, Int(5)).has_value());
	CHECK_FALSE(sqrt_in_field(q_sqrt2(), Int(3)).has_value());
}

TEST_CASE("floor consistency law")
{
	FieldPtr F = q_sqrt2();
	FieldElem s2 = FieldElem::theta(F);
	for (long k = -7; k <= 7; k++) {
		FieldElem x = s2 * Rat(k) + Rat(k, 3);
		Int m = x.floor();
		CHECK((x - Rat(m)).sign() >= 0);
		CHECK((x - Rat(m + 1)).sign() < 0);
	}
}

TEST_CASE("real value coercions")
{
	RealValue a(Rat(1, 2));
	RealValue s2(FieldElem::theta(q_sqrt2()));
	CHECK((a + s2).floor_exact() == 1);
	CHECK((s2 * s2).rational_value() == Rat(2));
	CHECK(RealValue(Rat(-1, 2)).floor_exact() == -1);
	CHECK(RealValue(Rat(-1, 2)).ceil_exact() == 0);
	CHECK(s2.dist().less_than(RealValue(Rat(1, 2))));
	FieldPtr K = compositum();
	RealValue th(FieldElem::theta(K));
	CHECK_THROWS_AS((void)(th + s2), error);
}

TEST_CASE("pi")
{
	RealValue pi = pi_value();
	CHECK((pi - RealValue(3)).sign() == 1);
	CHECK(pi.floor_exact() == 3);
	CHECK((pi * RealValue(100)).floor_exact() == 314);
	QIval a = pi.effective().interval(8), b = pi.effective().interval(16);
	CHECK(a.contains(b));
	CHECK(b.width() <= dyadic_eps(16));
}

TEST_CASE("effective precision cap")
{
	Effective stuck([](unsigned long) { return QIval(Rat(-1), Rat(1)); }, 64);
	RealValue x(stuck);
	CHECK_THROWS_WITH_AS((void)x.sign(), doctest::Contains("precision"), error);
	try {
		(void)x.floor_exact();
		CHECK(false);
	} catch (const error &e) {
		CHECK(e.exit_code() == 3);
		CHECK(std::string(e.code_name()) == "PrecisionExhausted");
	}
}

TEST_CASE("nested real construction")
{
	std::vector<Int> Ns{Int(1), Int(8), Int(128)};
	std::vector<Rat> eps{Rat(1, 2), Rat(1, 4), Rat(1, 8)};
	RealValue a = construct_nested_real(Ns, eps);
	for (size_t i = 0; i < Ns.size(); i++) {
		RealValue d = (a * RealValue(Rat(Ns[i]))).dist();
		CHECK((d - RealValue(eps[i])).sign() <= 0);
	}
	/* nested and never degenerate */
	QIval prev = a.effective().interval(1);
	for (unsigned long k = 2; k <= 64; k++) {
		QIval cur = a.effective().interval(k);
		CHECK(prev.contains(cur));
		CHECK(cur.width() > 0);
		prev = cur;
	}
	CHECK_THROWS_AS(
	    (void)construct_nested_real({Int(1), Int(2)}, {Rat(1, 2), Rat(1, 2)}),
	    error);
	CHECK_THROWS_AS(
	    (void)construct_nested_real({Int(4), Int(2)}, {Rat(1, 2), Rat(1, 2)}),
	    error);
}

TEST_CASE("sqrt constant")
{
	CHECK(sqrt_value(Int(9)).rational_value() == Rat(3));
	RealValue s5 = sqrt_value(Int(5));
	CHECK((s5 * s5).rational_value() == Rat(5));
	CHECK(s5.floor_exact() == 2);
	CHECK_THROWS_AS((void)sqrt_value(Int(7), q_sqrt2()), error);
	RealValue s2 = sqrt_value(Int(2), q_sqrt2());
	CHECK((s2 * s2).rational_value() == Rat(2));
}
