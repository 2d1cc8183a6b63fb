#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracketword/analysis.hpp"
#include "bracketword/errors.hpp"

#include <cmath>

using namespace bw;

namespace {

RealValue golden_alpha()
{
	/* (sqrt(5)-1)/2 */
	return (sqrt_value(Int(5)) - RealValue(Rat(1))) * RealValue(Rat(1, 2));
}

WordPtr fibonacci_word()
{
	return sturmian_word(golden_alpha(), RealValue(Rat(0)), false);
}

WordPtr periodic01()
{
	auto alpha = std::make_shared<Alphabet>();
	alpha->intern("0");
	alpha->intern("1");
	return std::make_shared<Word>(alpha,
	                              [](size_t n) { return (Symbol)(n % 2); });
}

std::vector<size_t> range1(size_t hi)
{
	std::vector<size_t> out;
	for (size_t i = 1; i <= hi; i++)
		out.push_back(i);
	return out;
}

}

TEST_CASE("sturmian complexity p(N) = N+1")
{
	auto a = fibonacci_word();
	auto prof = subword_complexity(a, range1(50), 5000);
	for (auto &[N, p] : prof.table)
		CHECK(p == N + 1);
	auto per = periodicity_check(prof);
	CHECK(per.aperiodic);
	CHECK(per.N == 50);
}

TEST_CASE("periodic word complexity saturates")
{
	auto a = periodic01();
	auto prof = subword_complexity(a, range1(10), 1000);
	CHECK(prof.at(1) == 2);
	CHECK(prof.at(2) == 2);
	CHECK(prof.at(10) == 2);
	auto per = periodicity_check(prof);
	CHECK(!per.aperiodic);
	CHECK(per.N == 2);
	CHECK(per.period_bound == 2);
}

TEST_CASE("product of sturmian and periodic obeys the product bound")
{
	auto a = fibonacci_word();
	auto b = periodic01();
	auto ab = product_word(a, b);
	auto pa = subword_complexity(a, range1(20), 2000);
	auto pb = subword_complexity(b, range1(20), 2000);
	auto pab = subword_complexity(ab, range1(20), 2000);
	for (size_t N = 1; N <= 20; N++) {
		CHECK(pab.at(N) <= pa.at(N) * pb.at(N));
		CHECK(pab.at(N) >= pa.at(N));
	}
}

TEST_CASE("complexity invariants on the fibonacci word")
{
	auto a = fibonacci_word();
	auto prof = subword_complexity(a, range1(40), 4000);
	for (size_t N = 1; N < 40; N++) {
		CHECK(prof.at(N) <= prof.at(N + 1));
		CHECK(prof.at(N + 1) <= 2 * prof.at(N));
	}
	for (size_t N = 1; N <= 20; N++)
		for (size_t M = 1; M <= 20; M++)
			CHECK(prof.at(N + M) <= prof.at(N) * prof.at(M));
}

TEST_CASE("coding can only contract complexity")
{
	auto a = fibonacci_word();
	auto collapsed = code_word(a, {{"0", "a"}, {"1", "a"}});
	auto pc = subword_complexity(collapsed, range1(10), 1000);
	for (auto &[N, p] : pc.table)
		CHECK(p == 1);
}

TEST_CASE("frequency of 1 in the fibonacci word approaches 1/phi")
{
	auto a = fibonacci_word();
	auto rep = frequency(a, {a->alphabet()->lookup("1")}, {1000, 5000}, 20000);
	double inv_phi = 2.0 / (1.0 + std::sqrt(5.0));
	for (auto &row : rep.rows) {
		CHECK(row.freq_min <= inv_phi + 1e-9);
		CHECK(row.freq_max >= inv_phi - 1e-9);
		CHECK(std::fabs(row.freq_last - inv_phi) < 0.01);
		CHECK(row.freq_max - row.freq_min < 0.01);
	}
}

TEST_CASE("recurrence function estimates")
{
	auto p = periodic01();
	Symbol one = p->alphabet()->lookup("1");
	Symbol zero = p->alphabet()->lookup("0");
	auto r = recurrence_function(p, {zero}, 1000);
	CHECK(!r.unbounded_marker);
	CHECK(r.value == 3); /* gap 2 between starts, plus factor length */
	auto r2 = recurrence_function(p, {one, one}, 1000);
	CHECK(r2.unbounded_marker);
	CHECK(r2.value == 0);

	/* sparse set {2,5,36}: the trailing 1-free stretch dominates */
	auto s = sparse_word({Int(2), Int(5), Int(36)});
	Symbol s1 = s->alphabet()->lookup("1");
	auto r3 = recurrence_function(s, {s1}, 200);
	CHECK(r3.unbounded_marker);
	CHECK(r3.value == 164); /* open gap 199 - 36 = 163, plus length 1 */

	/* indicator of the fibonacci set inside its last element */
	auto f = recset_word({Int(1), Int(1)}, {Int(0), Int(1)});
	Symbol f1 = f->alphabet()->lookup("1");
	auto r4 = recurrence_function(f, {f1}, 90);
	CHECK(!r4.unbounded_marker);
	CHECK(r4.value == 35); /* widest gap 55 -> 89, plus length 1 */
}

TEST_CASE("counting and discrepancy on the fibonacci set")
{
	auto f = recset_word({Int(1), Int(1)}, {Int(0), Int(1)});
	Symbol one = f->alphabet()->lookup("1");
	auto rep = counting_and_discrepancy(f, one, {10, 100}, 100);
	CHECK(rep.rows[0].N == 10);
	CHECK(rep.rows[0].cnt == 6); /* {0,1,2,3,5,8} */
	CHECK(rep.rows[1].cnt == 11);
	CHECK(rep.freq_end == doctest::Approx(0.11));
}

TEST_CASE("sturmian balance constant is 1")
{
	auto a = fibonacci_word();
	Symbol one = a->alphabet()->lookup("1");
	CHECK(balance_constant(a, one, 64, 5000) == 1);
	/* the periodic word 0101... is balanced too */
	auto p = periodic01();
	CHECK(balance_constant(p, p->alphabet()->lookup("1"), 32, 1000) == 1);
}

TEST_CASE("growth exponent recovers a square-root law")
{
	std::vector<std::pair<size_t, size_t>> samples;
	for (size_t k = 10; k <= 20; k++) {
		size_t N = (size_t)1 << k;
		samples.emplace_back(N, (size_t)std::llround(std::sqrt((double)N)));
	}
	auto fit = growth_exponent(samples);
	CHECK(std::fabs(fit.slope - 0.5) < 0.01);
}

TEST_CASE("log fit recovers a logarithmic count")
{
	std::vector<std::pair<size_t, size_t>> samples;
	double c = 2.078;
	for (size_t k = 10; k <= 20; k++) {
		size_t N = (size_t)1 << k;
		samples.emplace_back(N, (size_t)std::llround(c * std::log((double)N)));
	}
	auto fit = log_fit(samples);
	CHECK(std::fabs(fit.slope - c) < 0.1);
}

TEST_CASE("fit helpers reject thin samples")
{
	std::vector<std::pair<size_t, size_t>> few = {{10, 3}, {100, 10}, {1000, 31}};
	CHECK_THROWS_WITH_AS(growth_exponent(few), doctest::Contains("4"), error);
	std::vector<std::pair<size_t, size_t>> narrow = {
	    {10, 3}, {12, 3}, {14, 4}, {16, 4}, {18, 4}};
	CHECK_THROWS_AS(growth_exponent(narrow), error);
}

TEST_CASE("surjection coverage of the probe word")
{
	auto g = gA_probe_word(2);
	auto rep = surjection_coverage(g, 4, 400);
	CHECK(rep.first_hit[0][0] == 0);
	CHECK(rep.hit_count >= 1);
	CHECK(rep.hit_count <= 16);
	/* coverage only grows with the horizon */
	auto rep2 = surjection_coverage(g, 4, 800);
	CHECK(rep2.hit_count >= rep.hit_count);
	for (size_t k = 0; k < 4; k++)
		for (size_t l = 0; l < 4; l++)
			if (rep.first_hit[k][l] >= 0)
				CHECK(rep2.first_hit[k][l] == rep.first_hit[k][l]);
}

TEST_CASE("complexity is monotone in the horizon")
{
	auto a = fibonacci_word();
	auto small = subword_complexity(a, range1(20), 500);
	auto big = subword_complexity(a, range1(20), 5000);
	for (size_t N = 1; N <= 20; N++)
		CHECK(small.at(N) <= big.at(N));
}
