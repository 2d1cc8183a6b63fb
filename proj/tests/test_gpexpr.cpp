#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracketword/errors.hpp"
#include "bracketword/gpexpr.hpp"

using namespace bw;

static FieldPtr compositum()
{
	return NumberField::define(QPoly::from_desc({1, 0, -10, 0, 1}), Rat(3), Rat(4));
}

TEST_CASE("parse and format round trip")
{
	const char *corpus[] = {
	    "floor(2*frac(sqrt(2)*n*floor(sqrt(3)*n)))",
	    "floor(n*phi) - floor((n - 1)*phi)",
	    "floor(a1*n + a2)",
	    "1 + n",
	    "n^2 + 3/4*n - 5",
	    "dist(pi*n) + ceil(1/2*n)",
	    "nint(sqrt(5)*n) - frac(7/3)",
	    "-n + 2",
	};
	FieldPtr K = compositum();
	for (const char *src : corpus) {
		ExprPtr e = parse_expr(src, K);
		std::string s = format_expr(e);
		ExprPtr e2 = parse_expr(s, K);
		CAPTURE(src);
		CAPTURE(s);
		CHECK(expr_equal(e, e2));
	}
	CHECK(format_expr(parse_expr("1 + n")) == "1 + n");
	CHECK(format_expr(mk_un(GPExpr::Kind::floor_, mk_var())) == "floor(n)");
}

TEST_CASE("parse errors")
{
	CHECK_THROWS_AS((void)parse_expr("floor(n"), error);
	CHECK_THROWS_AS((void)parse_expr("1 + + 2"), error);
	CHECK_THROWS_AS((void)parse_expr("bogus + 1"), error);
	try {
		(void)parse_expr("n $ 2");
		CHECK(false);
	} catch (const error &e) {
		CHECK(e.code() == errc::syntax_error);
		CHECK(std::string(e.what()).find("position") != std::string::npos);
	}
}

TEST_CASE("evaluation of the running example")
{
	FieldPtr K = compositum();
	ExprPtr g = parse_expr("floor(2*frac(sqrt(2)*n*floor(sqrt(3)*n)))", K);
	CHECK(eval_expr(g, Int(0)).rational_value() == Rat(0));
	CHECK(eval_expr(g, Int(1)).rational_value() == Rat(0));
	/* cross-check a window against direct arithmetic in K */
	FieldElem s2 = *sqrt_in_field(K, Int(2));
	FieldElem s3 = *sqrt_in_field(K, Int(3));
	for (long n = 0; n <= 40; n++) {
		FieldElem inner = s2 * Rat(n) * Rat((s3 * Rat(n)).floor());
		FieldElem f = inner - Rat(inner.floor());
		Int expect = (f * Rat(2)).floor();
		CHECK(eval_expr(g, Int(n)).rational_value() == Rat(expect));
	}
}

TEST_CASE("Sturmian difference form prefix")
{
	/* alpha = (sqrt5 - 1)/2 = phi - 1, beta = 0 */
	RealValue alp = phi_value() - RealValue(Rat(1));
	ExprPtr e = parse_expr("floor(n*alp) - floor(alp*(n - 1))", nullptr,
	                       {{"alp", alp}});
	int expect[] = {1, 0, 1, 0, 1, 1, 0, 1, 0, 1};
	for (long n = 0; n <= 9; n++)
		CHECK(eval_expr(e, Int(n)).rational_value() == Rat(expect[n]));
}

TEST_CASE("height")
{
	CHECK(height(parse_expr("n^2 + 1")) == 0);
	CHECK(height(parse_expr("floor(sqrt(2)*n)")) == 1);
	FieldPtr K = compositum();
	ExprPtr e = parse_expr("floor(sqrt(2)*n*floor(sqrt(3)*n) + sqrt(5)*n^2)", K);
	CHECK(height(e) == 2);
	CHECK(height(parse_expr("dist(n*1/3)")) == 1);
	ExprPtr a = parse_expr("floor(n) + n");
	ExprPtr b = parse_expr("floor(floor(n)*1/2)");
	CHECK(height(mk_add({a, b})) == std::max(height(a), height(b)));
}

TEST_CASE("bracket ops match their floor expansions")
{
	FieldPtr F = NumberField::define(QPoly::from_desc({1, 0, -2}), Rat(1), Rat(2));
	ExprPtr x = mk_mul({mk_const(RealValue(FieldElem::theta(F)), "sqrt(2)"),
	                    mk_var()});
	ExprPtr fr = mk_un(GPExpr::Kind::frac_, x);
	ExprPtr fr2 = parse_expr("sqrt(2)*n - floor(sqrt(2)*n)", F);
	ExprPtr ce = mk_un(GPExpr::Kind::ceil_, x);
	ExprPtr ce2 = parse_expr("-floor(-sqrt(2)*n)", F);
	ExprPtr ni = mk_un(GPExpr::Kind::nint_, x);
	ExprPtr ni2 = parse_expr("floor(sqrt(2)*n + 1/2)", F);
	ExprPtr di = mk_un(GPExpr::Kind::dist_, x);
	ExprPtr di2 = parse_expr(
	    "(sqrt(2)*n - nint(sqrt(2)*n))*(1 - 2*(nint(sqrt(2)*n) - floor(sqrt(2)*n)))",
	    F);
	for (long n = -100; n <= 100; n += 7) {
		Int m(n);
		CHECK(eval_expr(fr, m).equals(eval_expr(fr2, m)));
		CHECK(eval_expr(ce, m).equals(eval_expr(ce2, m)));
		CHECK(eval_expr(ni, m).equals(eval_expr(ni2, m)));
		CHECK(eval_expr(di, m).equals(eval_expr(di2, m)));
	}
}

TEST_CASE("sum normal form")
{
	SUBCASE("polynomial base case")
	{
		SumNormalForm f = sum_normal_form(parse_expr("n^2"));
		REQUIRE(f.terms.size() == 1);
		CHECK(f.terms[0].floor_args.empty());
	}
	SUBCASE("forced structure")
	{
		FieldPtr K = compositum();
		ExprPtr e = parse_expr("floor(sqrt(2)*n)*floor(sqrt(3)*n) + n", K);
		SumNormalForm f = sum_normal_form(e);
		REQUIRE(f.terms.size() == 2);
		CHECK(f.terms[0].floor_args.size() == 2);
		CHECK(f.terms[1].floor_args.empty());
	}
	SUBCASE("height drop and pointwise equality")
	{
		FieldPtr K = compositum();
		const char *corpus[] = {
		    "floor(sqrt(2)*n*floor(sqrt(3)*n))",
		    "floor(2*frac(sqrt(2)*n*floor(sqrt(3)*n)))",
		    "dist(sqrt(2)*n) + ceil(sqrt(3)*n*1/2)",
		    "nint(sqrt(2)*n)*floor(n*1/3)",
		    "frac(sqrt(2)*n)*frac(sqrt(2)*n)",
		};
		for (const char *src : corpus) {
			ExprPtr e = parse_expr(src, K);
			unsigned long H = height(e);
			REQUIRE(H >= 1);
			SumNormalForm f = sum_normal_form(e);
			for (const SNFTerm &t : f.terms) {
				CHECK(height(t.poly) == 0);
				for (const ExprPtr &h : t.floor_args)
					CHECK(height(h) < H);
			}
			ExprPtr r = f.reconstruct();
			for (long n = 0; n <= 50; n++)
				CHECK(eval_expr(e, Int(n)).equals(eval_expr(r, Int(n))));
		}
	}
}

TEST_CASE("parameters")
{
	ExprPtr e = parse_expr("floor(a1*n + a2)");
	CHECK(expr_params(e) == std::set<unsigned long>{1, 2});
	FieldPtr F = NumberField::define(QPoly::from_desc({1, 0, -2}), Rat(1), Rat(2));
	RealValue s2(FieldElem::theta(F));
	ExprPtr bound = bind_params(e, {{1, s2}, {2, RealValue(Rat(0))}});
	ExprPtr direct = parse_expr("floor(sqrt(2)*n)", F);
	for (long n = 0; n <= 30; n++)
		CHECK(eval_expr(bound, Int(n)).equals(eval_expr(direct, Int(n))));
	CHECK_THROWS_AS((void)bind_params(e, {{1, s2}}), error);
	CHECK_THROWS_AS((void)eval_expr(e, Int(0)), error);
}

TEST_CASE("shift check")
{
	FieldPtr F = NumberField::define(QPoly::from_desc({1, 0, -2}), Rat(1), Rat(2));
	RealValue s2(FieldElem::theta(F));
	ExprPtr base = parse_expr("floor(sqrt(2)*n)", F);
	ExprPtr tmpl = parse_expr("floor(sqrt(2)*n + a1)", F);
	Int m(5);
	RealValue gamma = s2 * RealValue(Rat(m));
	CHECK(shift_check(tmpl, base, m, {{1, gamma}}, 200));
	CHECK(shift_check(tmpl, base, Int(0), {{1, RealValue(Rat(0))}}, 200));
	RealValue wrong = gamma + RealValue(Rat(1, 2));
	CHECK_FALSE(shift_check(tmpl, base, m, {{1, wrong}}, 200));
}
