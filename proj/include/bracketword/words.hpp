#pragma once

#include "gpexpr.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bw {

using Symbol = int32_t;

/* Interned symbol names shared between a word and its generator.  Most
 * words fix the alphabet up front; growable alphabets (gA_probe, block
 * words) intern new symbols as they appear. */
struct Alphabet {
	std::vector<std::string> names;
	std::map<std::string, Symbol> index;

	Symbol intern(const std::string &name);
	Symbol lookup(const std::string &name) const; /* -1 if absent */
	size_t size() const { return names.size(); }
};
using AlphabetPtr = std::shared_ptr<Alphabet>;

class Word;
using WordPtr = std::shared_ptr<Word>;

/* A lazily generated infinite word with a memoized prefix.  The
 * generator emits symbols sequentially; the cache is append-only, which
 * makes prefix stability structural. */
class Word {
	AlphabetPtr alpha_;
	std::function<Symbol(size_t)> gen_; /* called with consecutive n */
	std::vector<Symbol> cache_;
	std::mutex mu_;

public:
	Word(AlphabetPtr alpha, std::function<Symbol(size_t)> gen)
	: alpha_(std::move(alpha))
	, gen_(std::move(gen))
	{}

	const AlphabetPtr &alphabet() const { return alpha_; }
	const std::string &name_of(Symbol s) const { return alpha_->names[(size_t)s]; }

	Symbol at(size_t n);
	void ensure(size_t N);
	/* valid for indices < N after ensure(N); invalidated by growth */
	const Symbol *data(size_t N);
	std::vector<Symbol> prefix(size_t N);
	std::string prefix_string(size_t N, const std::string &sep = "");
};

/* Coding c : values -> symbols; total on observed values, no default. */
struct Coding {
	std::vector<std::pair<RealValue, std::string>> table;
};

/* Finitely many pairwise-disjoint real intervals with exact endpoints;
 * infinite endpoints allowed. */
struct RInterval {
	bool lo_inf = false, hi_inf = false;
	RealValue lo, hi;
	bool lo_closed = true, hi_closed = false;
};

struct IntervalSet {
	std::vector<RInterval> parts;
	bool contains(const RealValue &x) const;
};

WordPtr word_from_expr(ExprPtr e, Coding c);
WordPtr interval_indicator(ExprPtr e, IntervalSet I);
WordPtr zero_indicator(ExprPtr e);

WordPtr product_word(WordPtr a, WordPtr b);
WordPtr project_word(WordPtr ab, int coord); /* undoes product_word */
WordPtr code_word(WordPtr a, const std::map<std::string, std::string> &phi);
WordPtr case_word(std::vector<WordPtr> selectors, std::vector<WordPtr> branches);
WordPtr subsequence_word(WordPtr a, ExprPtr h);

struct RearrangeMode {
	enum class Kind { progression, dilute, block_permute } kind;
	unsigned long A = 1;
	unsigned long B = 0;                /* progression */
	std::string pad;                    /* dilute */
	std::vector<unsigned long> perm;    /* block_permute: pi over [A] */
};
WordPtr rearrange_word(WordPtr a, const RearrangeMode &mode);

WordPtr morphism_word(WordPtr a,
                      const std::map<std::string, std::vector<std::string>> &sigma);
WordPtr block_word(WordPtr a, unsigned long k);

/* Indicator word of an enumerated subset of N_0 given by a strictly
 * increasing generator of its elements. */
WordPtr enumerated_word(std::function<Int(size_t)> elem);

/* Builtin constructor catalog. */
WordPtr sturmian_word(RealValue alpha, RealValue beta, bool ceil_variant);
WordPtr poly_interval_word(ExprPtr p, IntervalSet I);
WordPtr littlewood_word(RealValue alpha, RealValue beta, Rat eps);
WordPtr recset_word(const std::vector<Int> &coeffs, const std::vector<Int> &initial);
WordPtr sparse_word(const std::vector<Int> &terms);
WordPtr tracked_sparse_word(const std::vector<Int> &f, const std::vector<Int> &base,
                            unsigned long C);
WordPtr heisenberg_word(RealValue alpha, RealValue beta, RealValue c);
WordPtr power_digit_word(RealValue alpha, unsigned long d);
WordPtr gA_probe_word(unsigned long A);
WordPtr growth_lambda_word(const Rat &lambda);

}
