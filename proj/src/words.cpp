#include "bracketword/words.hpp"
#include "bracketword/errors.hpp"

#include <algorithm>

namespace bw {

Symbol Alphabet::intern(const std::string &name)
{
	auto it = index.find(name);
	if (it != index.end())
		return it->second;
	Symbol s = (Symbol)names.size();
	names.push_back(name);
	index.emplace(name, s);
	return s;
}

Symbol Alphabet::lookup(const std::string &name) const
{
	auto it = index.find(name);
	return it == index.end() ? -1 : it->second;
}

namespace {

/* FieldElems from distinct fields cannot be combined exactly; demote
 * them all to effective reals so products still make sense */
void unify_fields(std::vector<RealValue *> vals)
{
	FieldPtr seen = nullptr;
	bool mixed = false;
	for (RealValue *v : vals) {
		FieldPtr f = v->field();
		if (!f)
			continue;
		if (seen && f != seen)
			mixed = true;
		seen = f;
	}
	if (!mixed)
		return;
	for (RealValue *v : vals)
		if (v->field())
			*v = to_effective(*v);
}

AlphabetPtr make_alphabet(std::initializer_list<const char *> names)
{
	auto a = std::make_shared<Alphabet>();
	for (const char *n : names)
		a->intern(n);
	return a;
}

AlphabetPtr binary_alphabet()
{
	return make_alphabet({"0", "1"});
}

AlphabetPtr digit_alphabet()
{
	auto a = std::make_shared<Alphabet>();
	for (int d = 0; d < 10; d++)
		a->intern(std::to_string(d));
	return a;
}

}

Symbol Word::at(size_t n)
{
	std::lock_guard<std::mutex> lock(mu_);
	while (cache_.size() <= n)
		cache_.push_back(gen_(cache_.size()));
	return cache_[n];
}

void Word::ensure(size_t N)
{
	std::lock_guard<std::mutex> lock(mu_);
	while (cache_.size() < N)
		cache_.push_back(gen_(cache_.size()));
}

const Symbol *Word::data(size_t N)
{
	ensure(N);
	return cache_.data();
}

std::vector<Symbol> Word::prefix(size_t N)
{
	ensure(N);
	std::lock_guard<std::mutex> lock(mu_);
	return std::vector<Symbol>(cache_.begin(), cache_.begin() + (long)N);
}

std::string Word::prefix_string(size_t N, const std::string &sep)
{
	ensure(N);
	std::string out;
	for (size_t i = 0; i < N; i++) {
		if (i)
			out += sep;
		out += name_of(at(i));
	}
	return out;
}

bool IntervalSet::contains(const RealValue &x) const
{
	for (const RInterval &iv : parts) {
		if (!iv.lo_inf) {
			int s = (x - iv.lo).sign();
			if (s < 0 || (s == 0 && !iv.lo_closed))
				continue;
		}
		if (!iv.hi_inf) {
			int s = (x - iv.hi).sign();
			if (s > 0 || (s == 0 && !iv.hi_closed))
				continue;
		}
		return true;
	}
	return false;
}

WordPtr word_from_expr(ExprPtr e, Coding c)
{
	auto alpha = std::make_shared<Alphabet>();
	/* symbols appear in table order */
	std::vector<std::pair<RealValue, Symbol>> table;
	std::map<Rat, Symbol> fast;
	for (auto &[val, name] : c.table) {
		Symbol s = alpha->intern(name);
		if (val.is_rational())
			fast.emplace(val.rational_value(), s);
		else
			table.emplace_back(val, s);
	}
	auto gen = [e = std::move(e), table = std::move(table),
	            fast = std::move(fast)](size_t n) -> Symbol {
		RealValue v = eval_expr(e, Int((unsigned long)n));
		if (v.is_rational()) {
			auto it = fast.find(v.rational_value());
			if (it != fast.end())
				return it->second;
		}
		for (auto &[val, s] : table)
			if (v.equals(val))
				return s;
		fail(errc::uncoded_value,
		     "value " + v.str() + " at n=" + std::to_string(n) +
		         " has no coding entry");
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

WordPtr interval_indicator(ExprPtr e, IntervalSet I)
{
	auto gen = [e = std::move(e), I = std::move(I)](size_t n) -> Symbol {
		return I.contains(eval_expr(e, Int((unsigned long)n))) ? 1 : 0;
	};
	return std::make_shared<Word>(binary_alphabet(), std::move(gen));
}

WordPtr zero_indicator(ExprPtr e)
{
	auto gen = [e = std::move(e)](size_t n) -> Symbol {
		return eval_expr(e, Int((unsigned long)n)).sign() == 0 ? 1 : 0;
	};
	return std::make_shared<Word>(binary_alphabet(), std::move(gen));
}

WordPtr product_word(WordPtr a, WordPtr b)
{
	auto alpha = std::make_shared<Alphabet>();
	size_t nb = b->alphabet()->size();
	for (const std::string &x : a->alphabet()->names)
		for (const std::string &y : b->alphabet()->names)
			alpha->intern("(" + x + "," + y + ")");
	auto gen = [a, b, nb](size_t n) -> Symbol {
		return (Symbol)((size_t)a->at(n) * nb + (size_t)b->at(n));
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

namespace {

/* splits "(x,y)" at the top-level comma */
std::pair<std::string, std::string> split_pair_name(const std::string &s)
{
	int depth = 0;
	for (size_t i = 1; i + 1 < s.size(); i++) {
		if (s[i] == '(')
			depth++;
		else if (s[i] == ')')
			depth--;
		else if (s[i] == ',' && depth == 0)
			return {s.substr(1, i - 1), s.substr(i + 1, s.size() - i - 2)};
	}
	fail(errc::usage, "not a product symbol: " + s);
}

}

WordPtr project_word(WordPtr ab, int coord)
{
	auto alpha = std::make_shared<Alphabet>();
	std::vector<std::string> comp;
	for (const std::string &name : ab->alphabet()->names) {
		auto [x, y] = split_pair_name(name);
		comp.push_back(coord == 0 ? x : y);
	}
	for (const std::string &c : comp)
		alpha->intern(c);
	auto gen = [ab, alpha, comp](size_t n) -> Symbol {
		return alpha->lookup(comp[(size_t)ab->at(n)]);
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

WordPtr code_word(WordPtr a, const std::map<std::string, std::string> &phi)
{
	auto alpha = std::make_shared<Alphabet>();
	std::vector<Symbol> map;
	for (const std::string &name : a->alphabet()->names) {
		auto it = phi.find(name);
		if (it == phi.end())
			fail(errc::uncoded_value, "coding misses symbol " + name);
		map.push_back(alpha->intern(it->second));
	}
	auto gen = [a, map = std::move(map)](size_t n) -> Symbol {
		return map[(size_t)a->at(n)];
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

WordPtr case_word(std::vector<WordPtr> selectors, std::vector<WordPtr> branches)
{
	if (selectors.size() != branches.size() || selectors.empty())
		fail(errc::usage, "need one selector per branch");
	auto alpha = std::make_shared<Alphabet>();
	for (const WordPtr &b : branches)
		for (const std::string &name : b->alphabet()->names)
			alpha->intern(name);
	auto gen = [selectors = std::move(selectors), branches = std::move(branches),
	            alpha](size_t n) -> Symbol {
		long hit = -1;
		for (size_t i = 0; i < selectors.size(); i++) {
			if (selectors[i]->name_of(selectors[i]->at(n)) != "1")
				continue;
			if (hit >= 0)
				fail(errc::partition_violation,
				     "two selectors fire at n=" + std::to_string(n));
			hit = (long)i;
		}
		if (hit < 0)
			fail(errc::partition_violation,
			     "no selector fires at n=" + std::to_string(n));
		const WordPtr &b = branches[(size_t)hit];
		return alpha->lookup(b->name_of(b->at(n)));
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

WordPtr subsequence_word(WordPtr a, ExprPtr h)
{
	auto alpha = a->alphabet();
	auto gen = [a, h = std::move(h)](size_t n) -> Symbol {
		RealValue v = eval_expr(h, Int((unsigned long)n));
		if (!v.is_rational() || v.rational_value().get_den() != 1)
			fail(errc::usage,
			     "index map is not integer-valued at n=" + std::to_string(n));
		Rat r = v.rational_value();
		if (r < 0)
			fail(errc::negative_index,
			     "negative index at n=" + std::to_string(n));
		Int m = r.get_num();
		if (!m.fits_ulong_p())
			fail(errc::too_large, "index overflow at n=" + std::to_string(n));
		return a->at((size_t)m.get_ui());
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

WordPtr rearrange_word(WordPtr a, const RearrangeMode &mode)
{
	unsigned long A = mode.A;
	if (A == 0)
		fail(errc::usage, "A must be positive");
	switch (mode.kind) {
	case RearrangeMode::Kind::progression: {
		unsigned long B = mode.B;
		auto gen = [a, A, B](size_t n) -> Symbol { return a->at(A * n + B); };
		return std::make_shared<Word>(a->alphabet(), std::move(gen));
	}
	case RearrangeMode::Kind::dilute: {
		auto alpha = std::make_shared<Alphabet>();
		for (const std::string &name : a->alphabet()->names)
			alpha->intern(name);
		Symbol pad = alpha->intern(mode.pad);
		auto gen = [a, alpha, A, pad](size_t n) -> Symbol {
			if (n % A != 0)
				return pad;
			return alpha->lookup(a->name_of(a->at(n / A)));
		};
		return std::make_shared<Word>(alpha, std::move(gen));
	}
	case RearrangeMode::Kind::block_permute: {
		const std::vector<unsigned long> &pi = mode.perm;
		if (pi.size() != A)
			fail(errc::usage, "permutation must have length A");
		std::vector<bool> seen(A, false);
		for (unsigned long v : pi) {
			if (v >= A || seen[v])
				fail(errc::usage, "not a permutation of [A]");
			seen[v] = true;
		}
		auto gen = [a, A, pi](size_t n) -> Symbol {
			return a->at(n / A + pi[n % A]);
		};
		return std::make_shared<Word>(a->alphabet(), std::move(gen));
	}
	}
	fail(errc::usage, "corrupt rearrange mode");
}

WordPtr morphism_word(WordPtr a,
                      const std::map<std::string, std::vector<std::string>> &sigma)
{
	size_t k = 0;
	for (auto &[src, img] : sigma) {
		if (k == 0)
			k = img.size();
		if (img.size() != k || k == 0)
			fail(errc::non_uniform_morphism,
			     "image of " + src + " has the wrong length");
	}
	auto alpha = std::make_shared<Alphabet>();
	std::vector<std::vector<Symbol>> images;
	for (const std::string &name : a->alphabet()->names) {
		auto it = sigma.find(name);
		if (it == sigma.end())
			fail(errc::uncoded_value, "morphism misses symbol " + name);
		std::vector<Symbol> img;
		for (const std::string &s : it->second)
			img.push_back(alpha->intern(s));
		images.push_back(std::move(img));
	}
	auto gen = [a, images = std::move(images), k](size_t n) -> Symbol {
		return images[(size_t)a->at(n / k)][n % k];
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

WordPtr block_word(WordPtr a, unsigned long k)
{
	if (k == 0)
		fail(errc::usage, "block length must be positive");
	auto alpha = std::make_shared<Alphabet>();
	auto gen = [a, alpha, k](size_t n) -> Symbol {
		std::string name;
		for (unsigned long j = 0; j < k; j++) {
			if (j)
				name += ",";
			name += a->name_of(a->at(n * k + j));
		}
		return alpha->intern(name);
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

WordPtr enumerated_word(std::function<Int(size_t)> elem)
{
	struct State {
		std::function<Int(size_t)> elem;
		size_t idx = 0;
		Int next = -1;
		bool have = false, done = false;
	};
	auto st = std::make_shared<State>();
	st->elem = std::move(elem);
	auto gen = [st](size_t n) -> Symbol {
		if (!st->have && !st->done) {
			Int v = st->elem(st->idx++);
			if (v < 0)
				st->done = true;
			else {
				if (st->next >= 0 && v <= st->next)
					fail(errc::usage, "enumeration not increasing");
				st->next = v;
				st->have = true;
			}
		}
		if (st->have && st->next == Int((unsigned long)n)) {
			st->have = false;
			return 1;
		}
		return 0;
	};
	return std::make_shared<Word>(binary_alphabet(), std::move(gen));
}

WordPtr sturmian_word(RealValue alpha, RealValue beta, bool ceil_variant)
{
	struct State {
		RealValue alpha, x;
		Int prev;
		bool init = false;
	};
	auto st = std::make_shared<State>();
	st->alpha = alpha;
	st->x = std::move(beta);
	auto gen = [st, ceil_variant](size_t n) -> Symbol {
		if (!st->init) {
			/* floor/ceil at n-1 = -1 */
			RealValue before = st->x - st->alpha;
			st->prev = ceil_variant ? before.ceil_exact() : before.floor_exact();
			st->init = true;
		}
		(void)n;
		Int cur = ceil_variant ? st->x.ceil_exact() : st->x.floor_exact();
		Int d = cur - st->prev;
		st->prev = cur;
		st->x = st->x + st->alpha;
		if (d < 0 || d > 1)
			fail(errc::uncoded_value,
			     "difference " + to_string(d) + " outside {0,1}");
		return (Symbol)d.get_si();
	};
	return std::make_shared<Word>(binary_alphabet(), std::move(gen));
}

WordPtr poly_interval_word(ExprPtr p, IntervalSet I)
{
	return interval_indicator(mk_un(GPExpr::Kind::frac_, std::move(p)), std::move(I));
}

WordPtr littlewood_word(RealValue alpha, RealValue beta, Rat eps)
{
	struct State {
		RealValue alpha, beta, xa, xb;
	};
	unify_fields({&alpha, &beta});
	auto st = std::make_shared<State>();
	st->alpha = alpha;
	st->beta = beta;
	st->xa = RealValue(Rat(0));
	st->xb = RealValue(Rat(0));
	auto gen = [st, eps](size_t n) -> Symbol {
		if (n == 0)
			return 0; /* the defining formula needs n >= 1 */
		st->xa = st->xa + st->alpha;
		st->xb = st->xb + st->beta;
		RealValue v = RealValue(Rat((unsigned long)n)) * st->xa.dist() *
		                  st->xb.dist() -
		              RealValue(eps);
		return v.sign() < 0 ? 1 : 0;
	};
	return std::make_shared<Word>(binary_alphabet(), std::move(gen));
}

WordPtr recset_word(const std::vector<Int> &coeffs, const std::vector<Int> &initial)
{
	if (coeffs.empty() || initial.size() != coeffs.size())
		fail(errc::usage, "need d coefficients and d initial terms");
	struct State {
		std::vector<Int> coeffs, window, pending;
		size_t emit = 0;
		Int last = -1;
	};
	auto st = std::make_shared<State>();
	st->coeffs = coeffs;
	st->window = initial;
	st->pending = initial;
	auto elem = [st](size_t) -> Int {
		for (unsigned long guard = 0; guard < 1000000; guard++) {
			if (st->emit < st->pending.size()) {
				Int v = st->pending[st->emit++];
				if (v > st->last) {
					st->last = v;
					return v;
				}
				continue;
			}
			/* u_{i+d} = sum_j a_j u_{i+d-j} */
			Int next = 0;
			size_t d = st->coeffs.size();
			for (size_t j = 0; j < d; j++)
				next += st->coeffs[j] * st->window[d - 1 - j];
			st->window.erase(st->window.begin());
			st->window.push_back(next);
			st->pending.push_back(next);
		}
		fail(errc::too_large, "recurrence is not eventually increasing");
	};
	return enumerated_word(elem);
}

WordPtr sparse_word(const std::vector<Int> &terms)
{
	for (size_t i = 0; i < terms.size(); i++) {
		if (terms[i] < 2 || (i > 0 && terms[i] <= terms[i - 1]))
			fail(errc::hypothesis_violated,
			     "terms must be increasing and at least 2");
		/* log n_{i+1} / log n_i >= 11/10, i.e. n_{i+1}^10 >= n_i^11 */
		if (i > 0 && pow_int(terms[i], 10) < pow_int(terms[i - 1], 11))
			fail(errc::hypothesis_violated,
			     "super-sparse growth fails at i=" + std::to_string(i));
	}
	auto elem = [terms](size_t i) -> Int {
		return i < terms.size() ? terms[i] : Int(-1);
	};
	return enumerated_word(elem);
}

WordPtr tracked_sparse_word(const std::vector<Int> &f, const std::vector<Int> &base,
                            unsigned long C)
{
	if (C == 0)
		fail(errc::usage, "C must be positive");
	for (size_t i = 1; i < f.size(); i++)
		if (f[i] < f[i - 1])
			fail(errc::hypothesis_violated, "target f must be non-decreasing");
	/* F' = F + [C], then greedily keep n when f(n) > |E intersect [n]| */
	std::vector<Int> fprime;
	for (const Int &b : base)
		for (unsigned long c = 0; c < C; c++)
			fprime.push_back(b + Int(c));
	std::sort(fprime.begin(), fprime.end());
	fprime.erase(std::unique(fprime.begin(), fprime.end()), fprime.end());
	std::vector<Int> E;
	for (const Int &n : fprime) {
		if (n < 0 || n >= Int((unsigned long)f.size()))
			continue;
		if (f[(size_t)n.get_ui()] > Int((unsigned long)E.size()))
			E.push_back(n);
	}
	auto elem = [E = std::move(E)](size_t i) -> Int {
		return i < E.size() ? E[i] : Int(-1);
	};
	return enumerated_word(elem);
}

WordPtr heisenberg_word(RealValue alpha, RealValue beta, RealValue c)
{
	struct State {
		RealValue alpha, beta, c, half_ab;
	};
	unify_fields({&alpha, &beta, &c});
	auto st = std::make_shared<State>();
	st->alpha = alpha;
	st->beta = beta;
	st->c = c;
	st->half_ab = alpha * beta * RealValue(Rat(1, 2));
	auto gen = [st](size_t n) -> Symbol {
		RealValue rn(Rat((unsigned long)n));
		RealValue f = (st->alpha * rn).frac();
		RealValue v = rn * st->beta * f - rn * rn * st->half_ab + st->c * rn;
		Int d = (v.frac() * RealValue(Rat(10))).floor_exact();
		return (Symbol)d.get_si();
	};
	return std::make_shared<Word>(digit_alphabet(), std::move(gen));
}

WordPtr power_digit_word(RealValue alpha, unsigned long d)
{
	auto gen = [alpha, d](size_t n) -> Symbol {
		RealValue v = alpha * RealValue(Rat(pow_int(Int((unsigned long)n), d)));
		Int digit = (v.frac() * RealValue(Rat(10))).floor_exact();
		return (Symbol)digit.get_si();
	};
	return std::make_shared<Word>(digit_alphabet(), std::move(gen));
}

WordPtr gA_probe_word(unsigned long A)
{
	if (A < 2)
		fail(errc::usage, "A must be at least 2");
	FieldPtr K = NumberField::define(QPoly::from_desc({1, 0, -10, 0, 1}),
	                                 Rat(3), Rat(4));
	FieldElem s2 = *sqrt_in_field(K, Int(2));
	FieldElem s3 = *sqrt_in_field(K, Int(3));
	auto alpha = std::make_shared<Alphabet>();
	auto gen = [alpha, s2, s3, A](size_t n) -> Symbol {
		auto comp = [&](const FieldElem &s) -> Int {
			FieldElem x = s * Rat((unsigned long)n);
			FieldElem f = x - Rat(x.floor());
			return (f.pow(A) * Rat((unsigned long)n)).floor();
		};
		Int k = comp(s2), l = comp(s3);
		return alpha->intern("(" + to_string(k) + "," + to_string(l) + ")");
	};
	return std::make_shared<Word>(alpha, std::move(gen));
}

WordPtr growth_lambda_word(const Rat &lambda)
{
	if (lambda <= 0 || lambda >= 1)
		fail(errc::usage, "lambda must lie in (0,1)");
	unsigned long p = (unsigned long)lambda.get_num().get_ui();
	unsigned long q = (unsigned long)lambda.get_den().get_ui();
	RealValue phi = phi_value();
	FieldElem ph = phi.field_elem();
	auto gen = [ph, p, q](size_t n) -> Symbol {
		if (n == 0)
			return 0;
		FieldElem x = ph * Rat((unsigned long)n);
		FieldElem dlt = x - Rat(x.nint());
		if (dlt.sign() < 0)
			dlt = -dlt;
		/* ||n phi|| <= n^(lambda-1)  <=>  ||n phi||^q * n^(q-p) <= 1 */
		FieldElem lhs = dlt.pow(q) * Rat(pow_int(Int((unsigned long)n), q - p));
		int s = (lhs - Rat(1)).sign();
		return s <= 0 ? 1 : 0;
	};
	return std::make_shared<Word>(binary_alphabet(), std::move(gen));
}

}
