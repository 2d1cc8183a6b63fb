#pragma once

#include <string>
#include <vector>

namespace bw {

/* One acceptance criterion outcome; detail carries the measured values so
 * failures are reproducible from the report alone. */
struct CriterionResult {
	int id;
	std::string name;
	bool pass;
	std::string detail;
	double seconds;
};

constexpr int kCriterionCount = 14;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

/* "criterion  7 pisot-oracle          PASS   3.21s  0 mismatches ..." */
std::string criterion_line(const CriterionResult &r);

}
