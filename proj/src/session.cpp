#include "bracketword/session.hpp"

#include "bracketword/errors.hpp"
#include "bracketword/pisot.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bw {

namespace {

std::string trim(const std::string &s)
{
	size_t a = s.find_first_not_of(" \t\r\n");
	if (a == std::string::npos)
		return "";
	size_t b = s.find_last_not_of(" \t\r\n");
	return s.substr(a, b - a + 1);
}

/* Splits on `sep` at bracket depth zero; parts are trimmed. */
std::vector<std::string> split_top(const std::string &s, char sep)
{
	std::vector<std::string> out;
	int depth = 0;
	std::string cur;
	for (char ch : s) {
		if (ch == '(' || ch == '[')
			depth++;
		else if (ch == ')' || ch == ']')
			depth--;
		if (ch == sep && depth == 0) {
			out.push_back(trim(cur));
			cur.clear();
		} else {
			cur += ch;
		}
	}
	out.push_back(trim(cur));
	return out;
}

bool is_identifier(const std::string &s)
{
	if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_'))
		return false;
	for (char ch : s)
		if (!(std::isalnum((unsigned char)ch) || ch == '_'))
			return false;
	return true;
}

/* `<integer polynomial in x>`: signed integer monomials c*x^k. */
QPoly parse_poly_in_x(const std::string &src)
{
	std::map<long, Int> coeff;
	long maxdeg = 0;
	size_t i = 0;
	auto skip = [&] {
		while (i < src.size() && std::isspace((unsigned char)src[i]))
			i++;
	};
	skip();
	bool first = true;
	while (i < src.size()) {
		int sign = 1;
		if (src[i] == '+' || src[i] == '-') {
			sign = src[i] == '-' ? -1 : 1;
			i++;
			skip();
		} else if (!first) {
			fail(errc::syntax_error, "expected '+' or '-' in polynomial");
		}
		first = false;
		Int c = 1;
		bool have_coeff = false;
		if (i < src.size() && std::isdigit((unsigned char)src[i])) {
			std::string digits;
			while (i < src.size() && std::isdigit((unsigned char)src[i]))
				digits += src[i++];
			c = Int(digits);
			have_coeff = true;
			skip();
			if (i < src.size() && src[i] == '*') {
				i++;
				skip();
			}
		}
		long deg = 0;
		if (i < src.size() && src[i] == 'x') {
			i++;
			deg = 1;
			if (i < src.size() && src[i] == '^') {
				i++;
				std::string digits;
				while (i < src.size() && std::isdigit((unsigned char)src[i]))
					digits += src[i++];
				if (digits.empty())
					fail(errc::syntax_error, "missing exponent");
				deg = std::stol(digits);
			}
		} else if (!have_coeff) {
			fail(errc::syntax_error, "expected monomial in polynomial");
		}
		coeff[deg] += sign * c;
		maxdeg = std::max(maxdeg, deg);
		skip();
	}
	std::vector<Rat> cs((size_t)maxdeg + 1, Rat(0));
	for (auto &[d, c] : coeff)
		cs[(size_t)d] = Rat(c);
	return QPoly(cs);
}

}

void Session::define_named_field(const std::string &name, const std::string &poly,
                                 const std::string &lo, const std::string &hi)
{
	if (!is_identifier(name))
		fail(errc::syntax_error, "bad field name '" + name + "'");
	if (fields_.count(name) || constants_.count(name))
		fail(errc::usage, "name '" + name + "' already defined");
	FieldPtr F = NumberField::define(parse_poly_in_x(poly), parse_rat(lo),
	                                 parse_rat(hi));
	fields_[name] = F;
	constants_[name] = RealValue(FieldElem::theta(F));
	ambient_ = F;
}

ExprPtr Session::expr(const std::string &src) const
{
	return parse_expr(src, ambient_, constants_);
}

RealValue Session::constant(const std::string &src) const
{
	ExprPtr e = expr(src);
	if (!expr_params(e).empty())
		fail(errc::usage, "'" + src + "' has unbound parameters");
	std::function<void(const ExprPtr &)> no_var = [&](const ExprPtr &x) {
		if (x->kind == GPExpr::Kind::var)
			fail(errc::usage, "'" + src + "' must not mention n");
		for (auto &k : x->kids)
			no_var(k);
	};
	no_var(e);
	return eval_expr(e, Int(0));
}

IntervalSet Session::intervals(const std::string &src) const
{
	/* `[lo,hi) u (lo,hi] u ...`; endpoints are constant expressions or
	 * -inf/inf. */
	IntervalSet I;
	for (const std::string &part : split_top(src, 'u')) {
		if (part.size() < 2)
			fail(errc::syntax_error, "bad interval '" + part + "'");
		char open = part.front(), close = part.back();
		if ((open != '[' && open != '(') || (close != ']' && close != ')'))
			fail(errc::syntax_error, "bad interval brackets in '" + part + "'");
		auto ends = split_top(part.substr(1, part.size() - 2), ',');
		if (ends.size() != 2)
			fail(errc::syntax_error, "interval needs two endpoints");
		RInterval r;
		r.lo_closed = open == '[';
		r.hi_closed = close == ']';
		if (ends[0] == "-inf")
			r.lo_inf = true;
		else
			r.lo = constant(ends[0]);
		if (ends[1] == "inf")
			r.hi_inf = true;
		else
			r.hi = constant(ends[1]);
		I.parts.push_back(std::move(r));
	}
	return I;
}

WordPtr Session::word(const std::string &name_or_call)
{
	std::string s = trim(name_or_call);
	if (is_identifier(s)) {
		auto it = words_.find(s);
		if (it == words_.end())
			fail(errc::usage, "unknown word '" + s + "'");
		return it->second;
	}
	return make_word(s);
}

WordPtr Session::make_word(const std::string &call)
{
	size_t open = call.find('(');
	if (open == std::string::npos || call.back() != ')')
		fail(errc::syntax_error, "expected word name or constructor call, got '" +
		                             call + "'");
	std::string name = trim(call.substr(0, open));
	std::string body = call.substr(open + 1, call.size() - open - 2);
	/* argument groups separated by ';', items within a group by ',' */
	std::vector<std::vector<std::string>> g;
	for (const std::string &group : split_top(body, ';'))
		g.push_back(split_top(group, ','));
	auto arity = [&](size_t groups, size_t items0) {
		if (g.size() != groups || g[0].size() != items0)
			fail(errc::usage, "bad argument shape for " + name);
	};
	auto val = [&](const std::string &s) { return constant(s); };
	auto rat = [&](const std::string &s) {
		RealValue v = constant(s);
		if (!v.is_rational())
			fail(errc::usage, "'" + s + "' must be rational");
		return v.rational_value();
	};
	auto integer = [&](const std::string &s) {
		Rat r = rat(s);
		if (r.get_den() != 1)
			fail(errc::usage, "'" + s + "' must be an integer");
		return Int(r.get_num());
	};
	auto ulong_arg = [&](const std::string &s) {
		Int v = integer(s);
		if (v < 0 || !v.fits_ulong_p())
			fail(errc::usage, "'" + s + "' out of range");
		return v.get_ui();
	};
	auto ints = [&](const std::vector<std::string> &xs) {
		std::vector<Int> out;
		for (auto &x : xs)
			out.push_back(integer(x));
		return out;
	};
	/* `from -> to` pairs */
	auto arrow = [&](const std::string &s) {
		size_t p = s.find("->");
		if (p == std::string::npos)
			fail(errc::syntax_error, "expected '->' in '" + s + "'");
		return std::pair<std::string, std::string>(trim(s.substr(0, p)),
		                                           trim(s.substr(p + 2)));
	};

	if (name == "sturmian") {
		arity(1, 3);
		bool ceil_variant = g[0][2] == "ceil";
		if (!ceil_variant && g[0][2] != "floor")
			fail(errc::usage, "sturmian variant must be floor or ceil");
		return sturmian_word(val(g[0][0]), val(g[0][1]), ceil_variant);
	}
	if (name == "indicator") {
		arity(2, 1);
		return interval_indicator(expr(g[0][0]), intervals(g[1][0]));
	}
	if (name == "poly_interval") {
		arity(2, 1);
		return poly_interval_word(expr(g[0][0]), intervals(g[1][0]));
	}
	if (name == "zero") {
		arity(1, 1);
		return zero_indicator(expr(g[0][0]));
	}
	if (name == "coded") {
		if (g.size() != 2)
			fail(errc::usage, "coded needs an expression and a value map");
		Coding c;
		for (auto &item : g[1]) {
			auto [from, to] = arrow(item);
			c.table.push_back({val(from), to});
		}
		return word_from_expr(expr(g[0][0]), std::move(c));
	}
	if (name == "littlewood") {
		arity(1, 3);
		return littlewood_word(val(g[0][0]), val(g[0][1]), rat(g[0][2]));
	}
	if (name == "recset") {
		if (g.size() != 2)
			fail(errc::usage, "recset needs coefficients and initial terms");
		return recset_word(ints(g[0]), ints(g[1]));
	}
	if (name == "sparse")
		return sparse_word(ints(g[0]));
	if (name == "tracked_sparse") {
		if (g.size() != 3 || g[2].size() != 1)
			fail(errc::usage, "tracked_sparse needs f; base; C");
		return tracked_sparse_word(ints(g[0]), ints(g[1]), ulong_arg(g[2][0]));
	}
	if (name == "heisenberg") {
		arity(1, 3);
		return heisenberg_word(val(g[0][0]), val(g[0][1]), val(g[0][2]));
	}
	if (name == "power_digit") {
		arity(1, 2);
		return power_digit_word(val(g[0][0]), ulong_arg(g[0][1]));
	}
	if (name == "gA_probe") {
		arity(1, 1);
		return gA_probe_word(ulong_arg(g[0][0]));
	}
	if (name == "growth_lambda") {
		arity(1, 1);
		return growth_lambda_word(rat(g[0][0]));
	}
	if (name == "pisot_power") {
		arity(1, 2);
		return power_word(make_pisot_unit(integer(g[0][0]), integer(g[0][1])));
	}
	if (name == "product") {
		arity(1, 2);
		return product_word(word(g[0][0]), word(g[0][1]));
	}
	if (name == "project") {
		arity(1, 2);
		return project_word(word(g[0][0]), (int)ulong_arg(g[0][1]));
	}
	if (name == "code") {
		if (g.size() != 2)
			fail(errc::usage, "code needs a word and a symbol map");
		std::map<std::string, std::string> phi;
		for (auto &item : g[1]) {
			auto [from, to] = arrow(item);
			phi[from] = to;
		}
		return code_word(word(g[0][0]), phi);
	}
	if (name == "case") {
		if (g.size() != 2 || g[0].size() != g[1].size())
			fail(errc::usage, "case needs matching selectors and branches");
		std::vector<WordPtr> sels, branches;
		for (auto &s : g[0])
			sels.push_back(word(s));
		for (auto &b : g[1])
			branches.push_back(word(b));
		return case_word(std::move(sels), std::move(branches));
	}
	if (name == "subseq") {
		if (g.size() != 2 || g[0].size() != 1 || g[1].size() != 1)
			fail(errc::usage, "subseq needs a word and an index expression");
		return subsequence_word(word(g[0][0]), expr(g[1][0]));
	}
	if (name == "progression") {
		arity(1, 3);
		RearrangeMode m{RearrangeMode::Kind::progression, ulong_arg(g[0][1]),
		                ulong_arg(g[0][2]), "", {}};
		return rearrange_word(word(g[0][0]), m);
	}
	if (name == "dilute") {
		arity(1, 3);
		RearrangeMode m{RearrangeMode::Kind::dilute, ulong_arg(g[0][1]), 0,
		                g[0][2], {}};
		return rearrange_word(word(g[0][0]), m);
	}
	if (name == "block_permute") {
		if (g.size() != 2 || g[0].size() != 1)
			fail(errc::usage, "block_permute needs a word and a permutation");
		RearrangeMode m{RearrangeMode::Kind::block_permute, 0, 0, "", {}};
		for (auto &p : g[1])
			m.perm.push_back(ulong_arg(p));
		m.A = m.perm.size();
		return rearrange_word(word(g[0][0]), m);
	}
	if (name == "morphism") {
		if (g.size() != 2)
			fail(errc::usage, "morphism needs a word and image words");
		std::map<std::string, std::vector<std::string>> sigma;
		for (auto &item : g[1]) {
			auto [from, to] = arrow(item);
			std::vector<std::string> image;
			std::istringstream in(to);
			std::string sym;
			while (in >> sym)
				image.push_back(sym);
			sigma[from] = std::move(image);
		}
		return morphism_word(word(g[0][0]), sigma);
	}
	if (name == "block") {
		arity(1, 2);
		return block_word(word(g[0][0]), ulong_arg(g[0][1]));
	}
	fail(errc::usage, "unknown word constructor '" + name + "'");
}

void Session::load_defs_line(const std::string &line)
{
	std::string s = trim(line);
	if (s.empty() || s[0] == '#')
		return;
	std::istringstream in(s);
	std::string kw;
	in >> kw;
	if (kw == "field") {
		/* field <name> : <poly> in [<lo>,<hi>] */
		size_t colon = s.find(':');
		size_t in_kw = s.rfind(" in ");
		if (colon == std::string::npos || in_kw == std::string::npos ||
		    in_kw < colon)
			fail(errc::syntax_error, "bad field declaration: " + s);
		std::string name = trim(s.substr(5, colon - 5));
		std::string poly = trim(s.substr(colon + 1, in_kw - colon - 1));
		std::string iv = trim(s.substr(in_kw + 4));
		if (iv.size() < 2 || iv.front() != '[' || iv.back() != ']')
			fail(errc::syntax_error, "bad isolating interval: " + iv);
		auto ends = split_top(iv.substr(1, iv.size() - 2), ',');
		if (ends.size() != 2)
			fail(errc::syntax_error, "bad isolating interval: " + iv);
		define_named_field(name, poly, ends[0], ends[1]);
		return;
	}
	if (kw == "word") {
		/* word <name> = <constructor pipeline> */
		size_t eq = s.find('=');
		if (eq == std::string::npos)
			fail(errc::syntax_error, "bad word declaration: " + s);
		std::string name = trim(s.substr(5, eq - 5));
		if (!is_identifier(name))
			fail(errc::syntax_error, "bad word name '" + name + "'");
		if (words_.count(name))
			fail(errc::usage, "name '" + name + "' already defined");
		words_[name] = word(trim(s.substr(eq + 1)));
		return;
	}
	fail(errc::syntax_error, "unknown declaration '" + kw + "'");
}

void Session::load_defs_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		fail(errc::usage, "cannot open defs file '" + path + "'");
	std::string line;
	while (std::getline(in, line))
		load_defs_line(line);
}

Session::Session()
{
	load_defs_line("word fib_sturmian = sturmian(1/2*sqrt(5) - 1/2, 0, floor)");
	load_defs_line("word fib_sturmian_ceil = sturmian(1/2*sqrt(5) - 1/2, 0, ceil)");
	load_defs_line("word pell_sturmian = sturmian(sqrt(2) - 1, 0, floor)");
	load_defs_line("word poly_square = poly_interval(phi*n^2; [0,1/4) u (3/4,1])");
	load_defs_line("word fib_set = recset(1,1; 0,1)");
	load_defs_line("word tribonacci_set = recset(1,1,1; 0,1,2)");
	load_defs_line("word tribonacci_power = pisot_power(1,1)");
}

}
