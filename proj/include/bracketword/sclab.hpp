#pragma once

#include "real.hpp"

#include <vector>

namespace bw {

/* Sublattice of Z^d as a Hermite-normal-form row basis (rows generate;
 * pivots positive, entries above each pivot reduced). */
struct IntLattice {
	long d = 0;
	std::vector<std::vector<Int>> basis;

	long rank() const { return (long)basis.size(); }
	bool contains(const std::vector<Int> &v) const;
};

IntLattice span_lattice(long d, const std::vector<std::vector<Int>> &vecs);

/* R_N(alpha, eps) = { m in Z^d : |m|_inf < N, |sum m_i alpha_i| < eps },
 * enumerated exhaustively with exact comparisons. */
struct RelationSet {
	long d = 0;
	long N = 0;
	std::vector<std::vector<Int>> members; /* sorted lexicographically */
};

RelationSet enumerate_relations(const std::vector<RealValue> &alpha,
                                const RealValue &eps, long N);

struct SandwichCertificate {
	RelationSet relations;
	IntLattice lattice;
	bool inclusion_exact;   /* every relation reduces to 0 mod the basis */
	Rat c_hat;              /* max |m . alpha| / (N^d eps) over the box */
	size_t lattice_points;  /* |Lambda intersect (-N,N)^d| */
};

SandwichCertificate lattice_approx(const std::vector<RealValue> &alpha,
                                   const RealValue &eps, long N);

/* All distinct subsets S cap H over half-spaces H, with the combinatorial
 * bound 2 sum_{i<=d} C(n-1, i) checked. */
struct CutFamily {
	std::vector<std::vector<size_t>> cuts; /* sorted index sets, sorted */
	unsigned long bound;
	bool within_bound;
};

CutFamily halfspace_cuts(const std::vector<std::vector<Int>> &points);

/* Distinct prefixes of g_alpha(n) = floor(sum alpha_i h_i(n)) over a
 * rational grid on [-R, R)^d, plus the lattice-based reconstruction check
 * on randomly sampled rational alpha. */
struct PrefixCountReport {
	long d = 0;
	size_t N = 0;
	Int H;                  /* max |h_i(n)| */
	Rat R, step;
	size_t grid_points = 0;
	size_t distinct = 0;    /* lower bound for the count over R^d */
	size_t verified = 0;    /* samples reproduced by the three-case formula */
};

PrefixCountReport prefix_count_experiment(const std::vector<std::vector<Int>> &h,
                                          const Rat &R, const Rat &step,
                                          size_t verify_samples,
                                          unsigned long seed);

}
