#pragma once

#include "real.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace bw {

struct GPExpr;
using ExprPtr = std::shared_ptr<const GPExpr>;

/* AST node of the generalised-polynomial DSL.  Subtraction is stored as
 * addition of a (-1)-scaled term and powers are expanded to products at
 * parse time, so the core only has the shapes below. */
struct GPExpr {
	enum class Kind {
		constant,
		var,   /* the integer argument n */
		param, /* parameter slot a<k> */
		add,
		mul,
		floor_,
		frac_,
		ceil_,
		nint_,
		dist_,
	};

	Kind kind;
	RealValue value;          /* constant payload */
	std::string name;         /* display name for named constants */
	unsigned long param = 0;  /* parameter index */
	std::vector<ExprPtr> kids;
};

ExprPtr mk_const(Rat r);
ExprPtr mk_const(RealValue v, std::string name = "");
ExprPtr mk_var();
ExprPtr mk_param(unsigned long i);
ExprPtr mk_add(std::vector<ExprPtr> kids);
ExprPtr mk_mul(std::vector<ExprPtr> kids);
ExprPtr mk_un(GPExpr::Kind k, ExprPtr child);

/* Structural equality (named constants compare by name, rational
 * constants by value). */
bool expr_equal(const ExprPtr &a, const ExprPtr &b);

/* Parameter indices appearing in the expression. */
std::set<unsigned long> expr_params(const ExprPtr &e);

/* Parses the DSL grammar:
 *   expr := ["-"] term (("+"|"-") term)*
 *   term := factor ("*" factor)*
 *   factor := atom ("^" uint)?
 *   atom := rational | "n" | "a" uint | fn "(" expr ")" | "(" expr ")"
 *           | constname
 *   fn := floor|frac|ceil|nint|dist
 *   constname := "sqrt(" uint ")" | "phi" | "pi" | identifier
 * sqrt/phi resolve inside `field` when possible, otherwise in a fresh
 * quadratic field; identifiers look up `constants`. */
ExprPtr parse_expr(const std::string &src, const FieldPtr &field = nullptr,
                   const std::map<std::string, RealValue> &constants = {});

std::string format_expr(const ExprPtr &e);

/* Exact evaluation at an integer argument; throws MissingParam if the
 * expression still has parameter slots. */
RealValue eval_expr(const ExprPtr &e, const Int &n);

/* Structural height: nesting depth of bracket operations. */
unsigned long height(const ExprPtr &e);

/* One term p * prod_j floor(h_j) of the sum-of-products normal form. */
struct SNFTerm {
	ExprPtr poly;
	std::vector<ExprPtr> floor_args;
};

struct SumNormalForm {
	std::vector<SNFTerm> terms;
	ExprPtr reconstruct() const;
};

/* Rewrites e as sum_i p_i prod_j floor(h_ij) with polynomial p_i and
 * every h_ij of strictly smaller height. */
SumNormalForm sum_normal_form(const ExprPtr &e);

/* Substitutes parameter slots; every index in the expression must be
 * assigned (MissingParam otherwise). */
ExprPtr bind_params(const ExprPtr &e, const std::map<unsigned long, RealValue> &assignment);

/* True iff bind_params(tmpl, assignment)(n) == base(n + m) for all
 * n in [0, N), exactly. */
bool shift_check(const ExprPtr &tmpl, const ExprPtr &base, const Int &m,
                 const std::map<unsigned long, RealValue> &assignment, unsigned long N);

}
