#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracketword/sclab.hpp"
#include "bracketword/errors.hpp"
#include "bracketword/field.hpp"

#include <map>
#include <random>
#include <set>

using namespace bw;

namespace {

using IVec = std::vector<Int>;

RealValue root2()
{
	return sqrt_value(Int(2));
}

/* Q(sqrt2 + sqrt3) and its interior square roots */
struct Compositum {
	FieldPtr F;
	FieldElem s2, s3;
};

Compositum compositum23()
{
	QPoly p(std::vector<Rat>{Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)});
	Compositum c;
	c.F = NumberField::define(p, Rat(3), Rat(4));
	c.s2 = *sqrt_in_field(c.F, 2);
	c.s3 = *sqrt_in_field(c.F, 3);
	return c;
}

}

TEST_CASE("span lattice HNF basics")
{
	auto L = span_lattice(2, {{Int(1), Int(-1)}});
	CHECK(L.rank() == 1);
	CHECK(L.contains({Int(5), Int(-5)}));
	CHECK(!L.contains({Int(5), Int(-4)}));

	auto M = span_lattice(2, {{Int(2), Int(0)}, {Int(0), Int(2)}, {Int(1), Int(1)}});
	CHECK(M.rank() == 2);
	std::vector<std::vector<Int>> expect{{Int(1), Int(1)}, {Int(0), Int(2)}};
	CHECK(M.basis == expect);
	CHECK(M.contains({Int(3), Int(5)}));  /* 3 + 5 even */
	CHECK(!M.contains({Int(3), Int(4)}));

	auto Z = span_lattice(3, {});
	CHECK(Z.rank() == 0);
	CHECK(Z.contains({Int(0), Int(0), Int(0)}));
	CHECK(!Z.contains({Int(1), Int(0), Int(0)}));
}

TEST_CASE("HNF idempotence")
{
	std::mt19937_64 rng(7);
	for (int trial = 0; trial < 20; trial++) {
		long d = 2 + (long)(rng() % 3);
		std::vector<std::vector<Int>> vecs;
		for (int i = 0; i < 4; i++) {
			std::vector<Int> v(d);
			for (long j = 0; j < d; j++)
				v[j] = (long)(rng() % 21) - 10;
			vecs.push_back(v);
		}
		auto L = span_lattice(d, vecs);
		auto L2 = span_lattice(d, L.basis);
		CHECK(L.basis == L2.basis);
		for (auto &v : vecs)
			CHECK(L.contains(v));
	}
}

TEST_CASE("relation enumeration on the spec examples")
{
	auto R1 = enumerate_relations({RealValue(Rat(1))}, RealValue(Rat(1, 2)), 3);
	CHECK(R1.members == std::vector<IVec>{{Int(0)}});

	auto R2 = enumerate_relations({RealValue(Rat(1)), RealValue(Rat(1))},
	                              RealValue(Rat(1, 2)), 2);
	std::vector<IVec> expect{{Int(-1), Int(1)}, {Int(0), Int(0)}, {Int(1), Int(-1)}};
	CHECK(R2.members == expect);

	auto R3 = enumerate_relations({RealValue(Rat(1)), root2()},
	                              RealValue(Rat(1, 10)), 10);
	bool has_zero = false;
	for (auto &m : R3.members) {
		if (m[0] == 0 && m[1] == 0)
			has_zero = true;
		/* each member satisfies the defining inequality exactly */
		RealValue s = RealValue(Rat(m[0])) + root2() * RealValue(Rat(m[1]));
		if (s.sign() < 0)
			s = -s;
		CHECK((RealValue(Rat(1, 10)) - s).sign() > 0);
		/* closed under negation */
		IVec neg{-m[0], -m[1]};
		CHECK(std::find(R3.members.begin(), R3.members.end(), neg) !=
		      R3.members.end());
	}
	CHECK(has_zero);
}

TEST_CASE("relation set grows with eps")
{
	std::vector<RealValue> alpha{RealValue(Rat(1)), root2()};
	std::vector<IVec> prev;
	for (Rat eps : {Rat(1, 100), Rat(1, 10), Rat(1, 2)}) {
		auto R = enumerate_relations(alpha, RealValue(eps), 12);
		for (auto &m : prev)
			CHECK(std::find(R.members.begin(), R.members.end(), m) !=
			      R.members.end());
		prev = R.members;
	}
}

TEST_CASE("relation enumeration size guard")
{
	std::vector<RealValue> alpha(4, RealValue(Rat(1)));
	CHECK_THROWS_WITH_AS(enumerate_relations(alpha, RealValue(Rat(1, 2)), 64),
	                     doctest::Contains("too large"), error);
	CHECK_THROWS_AS(enumerate_relations({}, RealValue(Rat(1, 2)), 4), error);
}

TEST_CASE("lattice approx certificates")
{
	auto c1 = lattice_approx({RealValue(Rat(1)), RealValue(Rat(1))},
	                         RealValue(Rat(1, 2)), 2);
	CHECK(c1.inclusion_exact);
	CHECK(c1.lattice.rank() == 1);
	CHECK(c1.lattice.basis[0] == IVec{Int(1), Int(-1)});
	CHECK(c1.lattice_points == 3);
	CHECK(c1.c_hat == 0);

	auto C = compositum23();
	auto c2 = lattice_approx({RealValue(Rat(1)), RealValue(C.s2), RealValue(C.s3)},
	                         RealValue(Rat(1, 1000000)), 8);
	CHECK(c2.lattice.rank() == 0);
	CHECK(c2.lattice_points == 1);
	CHECK(c2.c_hat == 0);

	auto c3 = lattice_approx(
	    {RealValue(Rat(1)), RealValue(Rat(100001, 100000))},
	    RealValue(Rat(1, 10000)), 4);
	CHECK(c3.inclusion_exact);
	CHECK(c3.lattice.contains({Int(1), Int(-1)}));
}

TEST_CASE("halfspace cuts on the spec examples")
{
	auto one = halfspace_cuts({{Int(3), Int(4)}});
	CHECK(one.cuts == std::vector<std::vector<size_t>>{{}, {0}});
	CHECK(one.bound == 2);
	CHECK(one.within_bound);

	auto col = halfspace_cuts({{Int(0), Int(0)}, {Int(1), Int(1)}, {Int(2), Int(2)}});
	std::vector<std::vector<size_t>> expect{{}, {0}, {0, 1}, {0, 1, 2}, {1, 2}, {2}};
	CHECK(col.cuts == expect);
	CHECK(col.bound == 8);
	CHECK(col.within_bound);

	auto quad = halfspace_cuts(
	    {{Int(0), Int(0)}, {Int(4), Int(1)}, {Int(1), Int(5)}, {Int(5), Int(6)}});
	CHECK(quad.cuts.size() <= 14);
	CHECK(quad.bound == 14);
	CHECK(quad.within_bound);
}

TEST_CASE("harding bound on random point sets")
{
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 40; trial++) {
		size_t n = 1 + rng() % 10;
		size_t d = 1 + rng() % 3;
		std::vector<IVec> pts;
		for (size_t i = 0; i < n; i++) {
			IVec p(d);
			for (size_t j = 0; j < d; j++)
				p[j] = (long)(rng() % 15) - 7;
			pts.push_back(p);
		}
		auto fam = halfspace_cuts(pts);
		CHECK(fam.within_bound);
		/* complements of cuts are cuts */
		std::set<std::vector<size_t>> family(fam.cuts.begin(), fam.cuts.end());
		for (auto &c : fam.cuts) {
			std::vector<size_t> comp;
			for (size_t i = 0; i < n; i++)
				if (std::find(c.begin(), c.end(), i) == c.end())
					comp.push_back(i);
			CHECK(family.count(comp) == 1);
		}
	}
}

TEST_CASE("halfspace cuts size guards")
{
	std::vector<IVec> big(15, IVec{Int(0)});
	CHECK_THROWS_AS(halfspace_cuts(big), error);
	CHECK_THROWS_AS(halfspace_cuts({IVec{Int(0), Int(0), Int(0), Int(0)}}), error);
}

TEST_CASE("half-lattice pair count stays tame at desk scale")
{
	/* box [0,2] x [0,3]: 12 integer points */
	std::vector<IVec> box;
	for (long x = 0; x <= 2; x++)
		for (long y = 0; y <= 3; y++)
			box.push_back({Int(x), Int(y)});
	std::set<std::pair<std::vector<IVec>, std::vector<IVec>>> pairs;
	std::vector<std::vector<std::vector<Int>>> gens;
	gens.push_back({});
	for (size_t i = 0; i < box.size(); i++) {
		gens.push_back({box[i]});
		for (size_t j = i + 1; j < box.size(); j++)
			gens.push_back({box[i], box[j]});
	}
	for (auto &g : gens) {
		auto L = span_lattice(2, g);
		std::vector<IVec> inside;
		for (auto &p : box)
			if (L.contains(p))
				inside.push_back(p);
		if (inside.empty()) {
			pairs.insert({inside, {}});
			continue;
		}
		auto fam = halfspace_cuts(inside);
		for (auto &c : fam.cuts) {
			std::vector<IVec> half;
			for (size_t idx : c)
				half.push_back(inside[idx]);
			pairs.insert({inside, half});
		}
	}
	size_t cap = 12ul * 12 * 12 * 12 * 10; /* |box|^(2d) * 10 */
	CHECK(pairs.size() <= cap);
	CHECK(pairs.size() > 10);
}

TEST_CASE("prefix count experiment basics")
{
	/* constant h on a single index: floor(alpha) over [-1, 1) */
	auto rep = prefix_count_experiment({{Int(1)}}, Rat(1), Rat(1, 4), 0, 1);
	CHECK(rep.grid_points == 8);
	CHECK(rep.distinct == 2);

	/* h(n) = n: refinement never loses prefixes */
	std::vector<Int> lin;
	for (long n = 0; n < 10; n++)
		lin.push_back(n);
	auto coarse = prefix_count_experiment({lin}, Rat(1), Rat(1, 8), 0, 1);
	auto fine = prefix_count_experiment({lin}, Rat(1), Rat(1, 16), 0, 1);
	CHECK(coarse.distinct <= fine.distinct);
	CHECK(fine.distinct <= 10ul * 10 * 4); /* Stern-Brocot style O(N^2) cells */
}

TEST_CASE("three-case reconstruction on the d=2 pair")
{
	std::vector<Int> h1, h2;
	for (long n = 1; n <= 16; n++) {
		h1.push_back(n);
		h2.push_back(isqrt(3 * n * n)); /* floor(sqrt(3) n) */
	}
	auto rep = prefix_count_experiment({h1, h2}, Rat(1), Rat(1, 4), 20, 42);
	CHECK(rep.H == 27);
	CHECK(rep.verified == 20);
	CHECK(rep.distinct >= 2);
}

TEST_CASE("prefix count grid guard")
{
	std::vector<Int> lin(4, 1);
	CHECK_THROWS_WITH_AS(
	    prefix_count_experiment({lin, lin, lin}, Rat(100), Rat(1, 100), 0, 1),
	    doctest::Contains("grid"), error);
}
