#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracketword/pisot.hpp"
#include "bracketword/errors.hpp"

#include <set>

using namespace bw;

namespace {

/* Independent oracle: the set {nint(beta^i)} up to a limit, from interval
 * powers of the real root certified to 250 bits. */
std::set<Int> oracle_powers(const Int &a, const Int &b, const Int &limit)
{
	QPoly p(std::vector<Rat>{Rat(-1), Rat(-b), Rat(-a), Rat(1)});
	auto roots = p.isolate_real_roots();
	REQUIRE(roots.size() == 1);
	QIval beta = p.refine_root(roots[0], dyadic_eps(250));
	std::set<Int> out;
	QIval pw(Rat(1), Rat(1));
	for (;;) {
		Int lo = floor_rat(pw.lo + Rat(1, 2));
		Int hi = floor_rat(pw.hi + Rat(1, 2));
		REQUIRE(lo == hi); /* interval wide enough to round unambiguously */
		if (lo > limit)
			break;
		out.insert(lo);
		pw = pw * beta;
	}
	return out;
}

}

TEST_CASE("constructor accepts the three shipped units")
{
	auto t = make_pisot_unit(1, 1);
	CHECK(t->disc == -44);
	auto u = make_pisot_unit(2, -1);
	CHECK(u->disc == -23);
	auto v = make_pisot_unit(1, 0);
	CHECK(v->disc == -31);
	/* unit relation: beta * (1/beta) = 1 */
	CHECK((t->beta * t->inv_beta).rational_value() == 1);
}

TEST_CASE("constructor rejects bad parameters")
{
	/* x = -1 is a root when b = a + 2 */
	CHECK_THROWS_WITH_AS(make_pisot_unit(0, 2), doctest::Contains("reducible"),
	                     error);
	/* x = 1 is a root when b = -a */
	CHECK_THROWS_AS(make_pisot_unit(2, -2), error);
	/* irreducible but totally real: x^3 - 5x^2 + 6x - 1 has disc 49 */
	CHECK_THROWS_WITH_AS(make_pisot_unit(5, -6), doctest::Contains("negative"),
	                     error);
	/* one real root but below 1: x^3 + x^2 - 1 */
	CHECK_THROWS_WITH_AS(make_pisot_unit(-1, 0),
	                     doctest::Contains("greater than 1"), error);
}

TEST_CASE("tribonacci trace sequence")
{
	auto t = make_pisot_unit(1, 1);
	auto tr = trace_sequence(t, 9);
	std::vector<Int> expect{3, 1, 3, 7, 11, 21, 39, 71, 131};
	CHECK(tr == expect);
}

TEST_CASE("ghh decomposition reconstructs n from the trace")
{
	for (auto [a, b] : {std::pair<long, long>{1, 1}, {2, -1}, {1, 0}}) {
		auto P = make_pisot_unit(a, b);
		for (long n = -100; n <= 100; n++) {
			auto d = solve_ghh(P, n);
			CHECK(d.trace == Rat(n));
		}
		for (long n : {1234L, -56789L, 99991L}) {
			auto d = solve_ghh(P, n);
			CHECK(d.trace == Rat(n));
		}
	}
}

TEST_CASE("g at a power index is the exact power")
{
	auto t = make_pisot_unit(1, 1);
	/* nint(beta^5) = 21 */
	auto d = solve_ghh(t, 21);
	CHECK(d.g == t->beta.pow(5));
	CHECK(d.g.norm() == 1);
	/* 20 is not a rounded power */
	auto d2 = solve_ghh(t, 20);
	bool integral = d2.u.get_den() == 1 && d2.v.get_den() == 1 &&
	                d2.w.get_den() == 1;
	CHECK((!integral || d2.g.norm() != 1));
}

TEST_CASE("norm multiplicativity on decomposition values")
{
	auto P = make_pisot_unit(2, -1);
	for (long n : {7L, 19L, 152L, 4001L})
		for (long m : {3L, 88L, 1207L}) {
			auto dn = solve_ghh(P, n), dm = solve_ghh(P, m);
			CHECK(dn.g.norm() * dm.g.norm() == (dn.g * dm.g).norm());
		}
}

TEST_CASE("tribonacci membership on known values")
{
	auto t = make_pisot_unit(1, 1);
	for (long n : {1L, 2L, 3L, 6L, 11L, 21L, 39L, 71L})
		CHECK(membership_test(t, n));
	CHECK(!membership_test(t, 0));
	CHECK(!membership_test(t, 40));
	CHECK(!membership_test(t, -5));
}

TEST_CASE("non-fundamental unit does not over-accept")
{
	/* for (2,-1) the field is the disc -23 cubic and beta is the square
	 * of its fundamental unit; odd powers of that unit sit in the
	 * acceptance window but are not beta powers */
	auto P = make_pisot_unit(2, -1);
	for (long n : {1130L, 1983L, 3480L, 6107L}) {
		auto d = solve_ghh(P, n);
		CHECK(d.g.norm() == 1); /* genuinely a unit in the window */
		CHECK(!membership_test(P, n));
	}
}

TEST_CASE("membership matches the interval-power oracle up to 10^4")
{
	for (auto [a, b] : {std::pair<long, long>{1, 1}, {2, -1}, {1, 0}}) {
		CAPTURE(a);
		CAPTURE(b);
		auto P = make_pisot_unit(a, b);
		auto E = oracle_powers(a, b, 10000);
		size_t mismatches = 0;
		for (long n = 0; n <= 10000; n++)
			if (membership_test(P, n) != (E.count(n) != 0))
				mismatches++;
		CHECK(mismatches == 0);
	}
}

TEST_CASE("traces eventually round the real power, with small-index slack")
{
	/* conjugate contribution |alpha^i + conj(alpha)^i| < 1/2 only holds
	 * from some small index on; pin the early disagreements exactly */
	auto check_from = [](long a, long b, size_t from) {
		auto P = make_pisot_unit(a, b);
		auto tr = trace_sequence(P, 41);
		QPoly p(std::vector<Rat>{Rat(-1), Rat(-b), Rat(-a), Rat(1)});
		QIval beta = p.refine_root(p.isolate_real_roots()[0], dyadic_eps(250));
		QIval pw(Rat(1), Rat(1));
		for (size_t i = 0; i <= 40; i++) {
			Int rounded = floor_rat(pw.lo + Rat(1, 2));
			if (i >= from)
				CHECK(tr[i] == rounded);
			pw = pw * beta;
		}
	};
	check_from(1, 1, 4);  /* t_3 = 7 but nint(beta^3) = 6 */
	check_from(2, -1, 5); /* t_4 = 10 but nint(beta^4) = 9 */
	check_from(1, 0, 6);  /* t_3 = 4 vs 3, t_5 = 6 vs 7 */
}

TEST_CASE("power word prefix")
{
	auto t = make_pisot_unit(1, 1);
	auto w = power_word(t);
	CHECK(w->prefix_string(25) == "0111001000010000000001000");
}
