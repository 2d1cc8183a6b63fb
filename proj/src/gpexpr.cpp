#include "bracketword/gpexpr.hpp"
#include "bracketword/errors.hpp"

#include <cctype>

namespace bw {

ExprPtr mk_const(Rat r)
{
	auto e = std::make_shared<GPExpr>();
	e->kind = GPExpr::Kind::constant;
	e->value = RealValue(std::move(r));
	return e;
}

ExprPtr mk_const(RealValue v, std::string name)
{
	auto e = std::make_shared<GPExpr>();
	e->kind = GPExpr::Kind::constant;
	e->value = std::move(v);
	e->name = std::move(name);
	return e;
}

ExprPtr mk_var()
{
	auto e = std::make_shared<GPExpr>();
	e->kind = GPExpr::Kind::var;
	return e;
}

ExprPtr mk_param(unsigned long i)
{
	auto e = std::make_shared<GPExpr>();
	e->kind = GPExpr::Kind::param;
	e->param = i;
	return e;
}

ExprPtr mk_add(std::vector<ExprPtr> kids)
{
	if (kids.size() == 1)
		return kids[0];
	auto e = std::make_shared<GPExpr>();
	e->kind = GPExpr::Kind::add;
	e->kids = std::move(kids);
	return e;
}

ExprPtr mk_mul(std::vector<ExprPtr> kids)
{
	if (kids.size() == 1)
		return kids[0];
	auto e = std::make_shared<GPExpr>();
	e->kind = GPExpr::Kind::mul;
	e->kids = std::move(kids);
	return e;
}

ExprPtr mk_un(GPExpr::Kind k, ExprPtr child)
{
	auto e = std::make_shared<GPExpr>();
	e->kind = k;
	e->kids.push_back(std::move(child));
	return e;
}

bool expr_equal(const ExprPtr &a, const ExprPtr &b)
{
	if (a->kind != b->kind)
		return false;
	switch (a->kind) {
	case GPExpr::Kind::constant:
		if (!a->name.empty() || !b->name.empty())
			return a->name == b->name;
		if (a->value.is_rational() != b->value.is_rational())
			return false;
		if (a->value.is_rational())
			return a->value.rational_value() == b->value.rational_value();
		return a->value.equals(b->value);
	case GPExpr::Kind::var:
		return true;
	case GPExpr::Kind::param:
		return a->param == b->param;
	default:
		break;
	}
	if (a->kids.size() != b->kids.size())
		return false;
	for (size_t i = 0; i < a->kids.size(); i++)
		if (!expr_equal(a->kids[i], b->kids[i]))
			return false;
	return true;
}

std::set<unsigned long> expr_params(const ExprPtr &e)
{
	std::set<unsigned long> out;
	std::vector<const GPExpr *> stack{e.get()};
	while (!stack.empty()) {
		const GPExpr *cur = stack.back();
		stack.pop_back();
		if (cur->kind == GPExpr::Kind::param)
			out.insert(cur->param);
		for (const ExprPtr &k : cur->kids)
			stack.push_back(k.get());
	}
	return out;
}

namespace {

struct Parser {
	const std::string &src;
	size_t pos = 0;
	const FieldPtr &field;
	const std::map<std::string, RealValue> &constants;

	[[noreturn]] void err(const std::string &what) const
	{
		fail(errc::syntax_error,
		     what + " at position " + std::to_string(pos) + " in `" + src + "`");
	}

	void skip_ws()
	{
		while (pos < src.size() && std::isspace((unsigned char)src[pos]))
			pos++;
	}

	bool eat(char c)
	{
		skip_ws();
		if (pos < src.size() && src[pos] == c) {
			pos++;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!eat(c))
			err(std::string("expected `") + c + "`");
	}

	char peek()
	{
		skip_ws();
		return pos < src.size() ? src[pos] : '\0';
	}

	unsigned long parse_uint()
	{
		skip_ws();
		if (pos >= src.size() || !std::isdigit((unsigned char)src[pos]))
			err("expected an unsigned integer");
		unsigned long v = 0;
		while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
			v = v * 10 + (unsigned long)(src[pos++] - '0');
		return v;
	}

	std::string parse_ident()
	{
		skip_ws();
		std::string s;
		while (pos < src.size() &&
		       (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
			s += src[pos++];
		return s;
	}

	ExprPtr negate(ExprPtr e)
	{
		return mk_mul({mk_const(Rat(-1)), std::move(e)});
	}

	ExprPtr parse_expr()
	{
		std::vector<ExprPtr> terms;
		bool neg = eat('-');
		ExprPtr t = parse_term();
		terms.push_back(neg ? negate(t) : t);
		for (;;) {
			if (eat('+'))
				terms.push_back(parse_term());
			else if (eat('-'))
				terms.push_back(negate(parse_term()));
			else
				break;
		}
		return mk_add(std::move(terms));
	}

	ExprPtr parse_term()
	{
		std::vector<ExprPtr> factors{parse_factor()};
		while (eat('*'))
			factors.push_back(parse_factor());
		return mk_mul(std::move(factors));
	}

	ExprPtr parse_factor()
	{
		ExprPtr a = parse_atom();
		if (!eat('^'))
			return a;
		unsigned long e = parse_uint();
		if (e == 0)
			return mk_const(Rat(1));
		std::vector<ExprPtr> reps((size_t)e, a);
		return mk_mul(std::move(reps));
	}

	ExprPtr resolve_sqrt(unsigned long u)
	{
		std::string name = "sqrt(" + std::to_string(u) + ")";
		if (field) {
			Int r = isqrt(Int(u));
			if (r * r == Int((long)u))
				return mk_const(RealValue(Rat(r)), name);
			auto c = sqrt_in_field(field, Int((long)u));
			if (c)
				return mk_const(RealValue(*c), name);
		}
		return mk_const(sqrt_value(Int((long)u)), name);
	}

	ExprPtr resolve_phi()
	{
		if (field) {
			auto c = sqrt_in_field(field, Int(5));
			if (c)
				return mk_const(RealValue((*c + Rat(1)) * Rat(1, 2)), "phi");
		}
		return mk_const(phi_value(), "phi");
	}

	ExprPtr parse_atom()
	{
		char c = peek();
		if (c == '(') {
			pos++;
			ExprPtr e = parse_expr();
			expect(')');
			return e;
		}
		if (std::isdigit((unsigned char)c)) {
			size_t start = pos;
			while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
				pos++;
			if (pos < src.size() && src[pos] == '/') {
				size_t save = pos;
				pos++;
				if (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
					while (pos < src.size() &&
					       std::isdigit((unsigned char)src[pos]))
						pos++;
				} else {
					pos = save;
				}
			}
			return mk_const(parse_rat(src.substr(start, pos - start)));
		}
		if (std::isalpha((unsigned char)c)) {
			std::string id = parse_ident();
			if (id == "n")
				return mk_var();
			if (id.size() >= 2 && id[0] == 'a' &&
			    id.find_first_not_of("0123456789", 1) == std::string::npos)
				return mk_param(std::stoul(id.substr(1)));
			if (id == "floor" || id == "frac" || id == "ceil" ||
			    id == "nint" || id == "dist") {
				expect('(');
				ExprPtr arg = parse_expr();
				expect(')');
				GPExpr::Kind k = id == "floor" ? GPExpr::Kind::floor_
				               : id == "frac"  ? GPExpr::Kind::frac_
				               : id == "ceil"  ? GPExpr::Kind::ceil_
				               : id == "nint"  ? GPExpr::Kind::nint_
				                               : GPExpr::Kind::dist_;
				return mk_un(k, arg);
			}
			if (id == "sqrt") {
				expect('(');
				unsigned long u = parse_uint();
				expect(')');
				return resolve_sqrt(u);
			}
			if (id == "phi")
				return resolve_phi();
			if (id == "pi")
				return mk_const(pi_value(), "pi");
			auto it = constants.find(id);
			if (it == constants.end())
				fail(errc::unknown_constant, "unknown constant `" + id + "`");
			return mk_const(it->second, id);
		}
		err("unexpected character");
	}
};

}

ExprPtr parse_expr(const std::string &src, const FieldPtr &field,
                   const std::map<std::string, RealValue> &constants)
{
	Parser p{src, 0, field, constants};
	ExprPtr e = p.parse_expr();
	p.skip_ws();
	if (p.pos != src.size())
		p.err("trailing input");
	return e;
}

namespace {

bool needs_parens(const GPExpr &parent, const GPExpr &child)
{
	if (parent.kind != GPExpr::Kind::mul)
		return false;
	return child.kind == GPExpr::Kind::add;
}

void format_rec(const ExprPtr &e, std::string &out)
{
	switch (e->kind) {
	case GPExpr::Kind::constant:
		if (!e->name.empty())
			out += e->name;
		else if (e->value.is_rational())
			out += to_string(e->value.rational_value());
		else
			out += "<" + e->value.str() + ">";
		return;
	case GPExpr::Kind::var:
		out += "n";
		return;
	case GPExpr::Kind::param:
		out += "a" + std::to_string(e->param);
		return;
	case GPExpr::Kind::add:
		for (size_t i = 0; i < e->kids.size(); i++) {
			const ExprPtr &k = e->kids[i];
			/* render (-1)*x summands as subtraction */
			if (k->kind == GPExpr::Kind::mul &&
			    k->kids.size() == 2 &&
			    k->kids[0]->kind == GPExpr::Kind::constant &&
			    k->kids[0]->name.empty() &&
			    k->kids[0]->value.is_rational() &&
			    k->kids[0]->value.rational_value() == Rat(-1)) {
				out += i > 0 ? " - " : "-";
				if (needs_parens(*k, *k->kids[1]))
					out += "(", format_rec(k->kids[1], out), out += ")";
				else
					format_rec(k->kids[1], out);
				continue;
			}
			if (i > 0)
				out += " + ";
			format_rec(k, out);
		}
		return;
	case GPExpr::Kind::mul:
		for (size_t i = 0; i < e->kids.size(); i++) {
			if (i > 0)
				out += "*";
			if (needs_parens(*e, *e->kids[i]))
				out += "(", format_rec(e->kids[i], out), out += ")";
			else
				format_rec(e->kids[i], out);
		}
		return;
	case GPExpr::Kind::floor_:
		out += "floor(";
		break;
	case GPExpr::Kind::frac_:
		out += "frac(";
		break;
	case GPExpr::Kind::ceil_:
		out += "ceil(";
		break;
	case GPExpr::Kind::nint_:
		out += "nint(";
		break;
	case GPExpr::Kind::dist_:
		out += "dist(";
		break;
	}
	format_rec(e->kids[0], out);
	out += ")";
}

}

std::string format_expr(const ExprPtr &e)
{
	std::string out;
	format_rec(e, out);
	return out;
}

RealValue eval_expr(const ExprPtr &e, const Int &n)
{
	switch (e->kind) {
	case GPExpr::Kind::constant:
		return e->value;
	case GPExpr::Kind::var:
		return RealValue(Rat(n));
	case GPExpr::Kind::param:
		fail(errc::missing_param,
		     "unbound parameter a" + std::to_string(e->param));
	case GPExpr::Kind::add: {
		RealValue v = eval_expr(e->kids[0], n);
		for (size_t i = 1; i < e->kids.size(); i++)
			v = v + eval_expr(e->kids[i], n);
		return v;
	}
	case GPExpr::Kind::mul: {
		RealValue v = eval_expr(e->kids[0], n);
		for (size_t i = 1; i < e->kids.size(); i++)
			v = v * eval_expr(e->kids[i], n);
		return v;
	}
	case GPExpr::Kind::floor_:
		return RealValue(Rat(eval_expr(e->kids[0], n).floor_exact()));
	case GPExpr::Kind::frac_:
		return eval_expr(e->kids[0], n).frac();
	case GPExpr::Kind::ceil_:
		return RealValue(Rat(eval_expr(e->kids[0], n).ceil_exact()));
	case GPExpr::Kind::nint_:
		return RealValue(Rat(eval_expr(e->kids[0], n).nint_exact()));
	case GPExpr::Kind::dist_:
		return eval_expr(e->kids[0], n).dist();
	}
	fail(errc::usage, "corrupt expression node");
}

unsigned long height(const ExprPtr &e)
{
	switch (e->kind) {
	case GPExpr::Kind::constant:
	case GPExpr::Kind::var:
	case GPExpr::Kind::param:
		return 0;
	case GPExpr::Kind::add:
	case GPExpr::Kind::mul: {
		unsigned long h = 0;
		for (const ExprPtr &k : e->kids)
			h = std::max(h, height(k));
		return h;
	}
	default:
		return height(e->kids[0]) + 1;
	}
}

namespace {

bool is_polynomial(const ExprPtr &e)
{
	switch (e->kind) {
	case GPExpr::Kind::constant:
	case GPExpr::Kind::var:
	case GPExpr::Kind::param:
		return true;
	case GPExpr::Kind::add:
	case GPExpr::Kind::mul:
		for (const ExprPtr &k : e->kids)
			if (!is_polynomial(k))
				return false;
		return true;
	default:
		return false;
	}
}

using Terms = std::vector<SNFTerm>;

Terms negate_terms(Terms ts)
{
	for (SNFTerm &t : ts)
		t.poly = mk_mul({mk_const(Rat(-1)), t.poly});
	return ts;
}

Terms mul_terms(const Terms &a, const Terms &b)
{
	Terms out;
	for (const SNFTerm &x : a)
		for (const SNFTerm &y : b) {
			SNFTerm t;
			t.poly = mk_mul({x.poly, y.poly});
			t.floor_args = x.floor_args;
			t.floor_args.insert(t.floor_args.end(), y.floor_args.begin(),
			                    y.floor_args.end());
			out.push_back(std::move(t));
		}
	return out;
}

Terms concat(Terms a, Terms b)
{
	a.insert(a.end(), b.begin(), b.end());
	return a;
}

Terms snf(const ExprPtr &e)
{
	if (is_polynomial(e))
		return {{e, {}}};
	switch (e->kind) {
	case GPExpr::Kind::add: {
		Terms out;
		for (const ExprPtr &k : e->kids)
			out = concat(std::move(out), snf(k));
		return out;
	}
	case GPExpr::Kind::mul: {
		Terms out = snf(e->kids[0]);
		for (size_t i = 1; i < e->kids.size(); i++)
			out = mul_terms(out, snf(e->kids[i]));
		return out;
	}
	case GPExpr::Kind::floor_:
		return {{mk_const(Rat(1)), {e->kids[0]}}};
	case GPExpr::Kind::frac_:
		/* {x} = x - floor(x) */
		return concat(snf(e->kids[0]),
		              {{mk_const(Rat(-1)), {e->kids[0]}}});
	case GPExpr::Kind::ceil_:
		/* ceil(x) = -floor(-x) */
		return {{mk_const(Rat(-1)),
		         {mk_mul({mk_const(Rat(-1)), e->kids[0]})}}};
	case GPExpr::Kind::nint_:
		/* nint(x) = floor(x + 1/2) */
		return {{mk_const(Rat(1)),
		         {mk_add({e->kids[0], mk_const(Rat(1, 2))})}}};
	case GPExpr::Kind::dist_: {
		/* dist(x) = (x - nint(x)) * (1 - 2(nint(x) - floor(x))) */
		const ExprPtr &x = e->kids[0];
		Terms nintT{{mk_const(Rat(1)), {mk_add({x, mk_const(Rat(1, 2))})}}};
		Terms floorT{{mk_const(Rat(1)), {x}}};
		Terms left = concat(snf(x), negate_terms(nintT));
		Terms gap = concat(nintT, negate_terms(floorT));
		for (SNFTerm &t : gap)
			t.poly = mk_mul({mk_const(Rat(-2)), t.poly});
		Terms right = concat({{mk_const(Rat(1)), {}}}, std::move(gap));
		return mul_terms(left, right);
	}
	default:
		fail(errc::usage, "corrupt expression node");
	}
}

}

SumNormalForm sum_normal_form(const ExprPtr &e)
{
	return SumNormalForm{snf(e)};
}

ExprPtr SumNormalForm::reconstruct() const
{
	std::vector<ExprPtr> sum;
	for (const SNFTerm &t : terms) {
		std::vector<ExprPtr> factors{t.poly};
		for (const ExprPtr &h : t.floor_args)
			factors.push_back(mk_un(GPExpr::Kind::floor_, h));
		sum.push_back(mk_mul(std::move(factors)));
	}
	if (sum.empty())
		return mk_const(Rat(0));
	return mk_add(std::move(sum));
}

ExprPtr bind_params(const ExprPtr &e, const std::map<unsigned long, RealValue> &assignment)
{
	for (unsigned long i : expr_params(e))
		if (!assignment.count(i))
			fail(errc::missing_param,
			     "no value for parameter a" + std::to_string(i));
	std::function<ExprPtr(const ExprPtr &)> walk =
	    [&](const ExprPtr &cur) -> ExprPtr {
		if (cur->kind == GPExpr::Kind::param)
			return mk_const(assignment.at(cur->param));
		if (cur->kids.empty())
			return cur;
		auto copy = std::make_shared<GPExpr>(*cur);
		for (ExprPtr &k : copy->kids)
			k = walk(k);
		return copy;
	};
	return walk(e);
}

bool shift_check(const ExprPtr &tmpl, const ExprPtr &base, const Int &m,
                 const std::map<unsigned long, RealValue> &assignment, unsigned long N)
{
	ExprPtr bound = bind_params(tmpl, assignment);
	for (unsigned long n = 0; n < N; n++) {
		RealValue a = eval_expr(bound, Int(n));
		RealValue b = eval_expr(base, Int(n) + m);
		if (!a.equals(b))
			return false;
	}
	return true;
}

}
