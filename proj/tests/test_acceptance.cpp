#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracketword/acceptance.hpp"

#include <iostream>

using namespace bw;

/* Criterion 8's first clause asserts trace(i) = nint(beta^i) already from
 * i = 3; the conjugate contribution is still above 1/2 there for every
 * shipped unit, so the faithful check reports FAIL with the exact
 * violating indices.  Everything else must pass. */
TEST_CASE("acceptance criteria")
{
	for (int id = 1; id <= kCriterionCount; id++) {
		auto r = run_criterion(id);
		std::cout << criterion_line(r) << "\n" << std::flush;
		CAPTURE(r.id);
		CAPTURE(r.detail);
		if (id == 8) {
			CHECK(!r.pass);
			CHECK(r.detail.find("(1,1) i=3: 7 vs 6") != std::string::npos);
			CHECK(r.detail.find("(2,-1) i=4: 10 vs 9") != std::string::npos);
			CHECK(r.detail.find("(1,0) i=3: 4 vs 3") != std::string::npos);
			CHECK(r.detail.find("(1,0) i=5: 6 vs 7") != std::string::npos);
			CHECK(r.detail.find("reconstruction violations over |n|<=1e4: 0") !=
			      std::string::npos);
		} else {
			CHECK(r.pass);
		}
	}
}
