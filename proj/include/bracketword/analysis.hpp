#pragma once

#include "words.hpp"

#include <optional>

namespace bw {

/* (N, p_a(N)) table measured over a fixed horizon; the counts are exact
 * for the inspected prefix and lower bounds for the full word. */
struct ComplexityProfile {
	size_t horizon = 0;
	std::vector<std::pair<size_t, size_t>> table;

	size_t at(size_t N) const;
};

ComplexityProfile subword_complexity(const WordPtr &a, const std::vector<size_t> &Ns,
                                     size_t horizon);

struct PeriodicityResult {
	bool aperiodic;
	/* aperiodic: the largest N verified with p(N) >= N+1;
	 * periodic evidence: the least N with p(N) <= N (period bound p(N)) */
	size_t N;
	size_t period_bound = 0;
};

PeriodicityResult periodicity_check(const ComplexityProfile &profile);

struct FrequencyReport {
	size_t horizon;
	struct Row {
		size_t N;
		double freq_min, freq_max, freq_last; /* over all windows [M, M+N) */
	};
	std::vector<Row> rows;
};

FrequencyReport frequency(const WordPtr &a, const std::vector<Symbol> &w,
                          const std::vector<size_t> &Ns, size_t horizon);

struct RecurrenceResult {
	bool unbounded_marker; /* no occurrence, or horizon-sized gap */
	size_t value;          /* horizon-bounded rec estimate */
};

RecurrenceResult recurrence_function(const WordPtr &a, const std::vector<Symbol> &w,
                                     size_t horizon);

struct GrowthReport {
	size_t horizon;
	struct Row {
		size_t N;
		size_t cnt;
		double discrepancy; /* |cnt - freq_end * N| */
	};
	std::vector<Row> rows;
	double freq_end; /* cnt(horizon)/horizon, recorded for reproducibility */
};

GrowthReport counting_and_discrepancy(const WordPtr &a, Symbol x,
                                      const std::vector<size_t> &Ns, size_t horizon);

/* max over lengths l <= L_max and same-length window pairs of the
 * difference in x-counts */
size_t balance_constant(const WordPtr &a, Symbol x, size_t L_max, size_t horizon);

struct FitResult {
	double slope;
	double intercept;
	double max_residual;
};

/* least-squares slope of log(count) against log(N) */
FitResult growth_exponent(const std::vector<std::pair<size_t, size_t>> &samples);
/* least-squares slope of count against log(N) (Theta(log N) counts) */
FitResult log_fit(const std::vector<std::pair<size_t, size_t>> &samples);

struct CoverageReport {
	unsigned long K;
	size_t horizon;
	/* first_hit[k][l] = least n with probe value (k,l), or -1 */
	std::vector<std::vector<long>> first_hit;
	size_t hit_count = 0;
};

CoverageReport surjection_coverage(const WordPtr &probe, unsigned long K,
                                   size_t horizon);

}
