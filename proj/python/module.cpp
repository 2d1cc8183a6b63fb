#include "bracketword/acceptance.hpp"
#include "bracketword/analysis.hpp"
#include "bracketword/errors.hpp"
#include "bracketword/pisot.hpp"
#include "bracketword/sclab.hpp"
#include "bracketword/session.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bw;

namespace {

/* Shared-ownership handle; Word itself is non-copyable (mutex). */
struct PyWord {
	WordPtr w;
};

std::vector<Symbol> lookup_factor(const WordPtr &w,
                                  const std::vector<std::string> &names,
                                  size_t horizon)
{
	w->ensure(horizon);
	std::vector<Symbol> out;
	for (auto &name : names) {
		Symbol s = w->alphabet()->lookup(name);
		if (s < 0)
			fail(errc::usage, "symbol '" + name +
			                      "' does not occur in the inspected prefix");
		out.push_back(s);
	}
	if (out.empty())
		fail(errc::usage, "empty factor");
	return out;
}

long long small(const Int &v)
{
	if (!v.fits_slong_p())
		fail(errc::too_large, "value does not fit a machine integer");
	return v.get_si();
}

}

PYBIND11_MODULE(_bracketword, m)
{
	m.doc() = "exact-arithmetic bracket word laboratory";

	static py::exception<error> exc(m, "Error");
	py::register_exception_translator([](std::exception_ptr p) {
		try {
			if (p)
				std::rethrow_exception(p);
		} catch (const error &e) {
			exc((std::string(e.code_name()) + ": " + e.what()).c_str());
		}
	});

	py::class_<PyWord>(m, "Word")
	    .def("prefix",
	         [](PyWord &self, size_t N) { return self.w->prefix_string(N); })
	    .def("symbols",
	         [](PyWord &self, size_t N) {
		         self.w->ensure(N);
		         std::vector<std::string> out;
		         for (size_t i = 0; i < N; i++)
			         out.push_back(self.w->name_of(self.w->at(i)));
		         return out;
	         })
	    .def("__getitem__", [](PyWord &self, size_t n) {
		    return self.w->name_of(self.w->at(n));
	    });

	py::class_<Session>(m, "Session")
	    .def(py::init<>())
	    .def("load_defs", &Session::load_defs_file)
	    .def("declare", &Session::load_defs_line)
	    .def("parse",
	         [](Session &s, const std::string &src) {
		         return format_expr(s.expr(src));
	         })
	    .def("height",
	         [](Session &s, const std::string &src) { return height(s.expr(src)); })
	    .def("eval",
	         [](Session &s, const std::string &src, long long n) {
		         return eval_expr(s.expr(src), Int((long)n)).str();
	         })
	    .def("constant",
	         [](Session &s, const std::string &src) {
		         return s.constant(src).str();
	         })
	    .def("word", [](Session &s, const std::string &spec) {
		    return PyWord{s.word(spec)};
	    });

	m.def("complexity",
	      [](PyWord &w, const std::vector<size_t> &Ns, size_t horizon) {
		      return subword_complexity(w.w, Ns, horizon).table;
	      });
	m.def("frequency",
	      [](PyWord &w, const std::vector<std::string> &factor,
	         const std::vector<size_t> &Ns, size_t horizon) {
		      auto rep = frequency(w.w, lookup_factor(w.w, factor, horizon), Ns,
		                           horizon);
		      std::vector<std::tuple<size_t, double, double, double>> out;
		      for (auto &r : rep.rows)
			      out.push_back({r.N, r.freq_min, r.freq_max, r.freq_last});
		      return out;
	      });
	m.def("recurrence",
	      [](PyWord &w, const std::vector<std::string> &factor, size_t horizon) {
		      auto r = recurrence_function(w.w, lookup_factor(w.w, factor, horizon),
		                                   horizon);
		      return std::make_pair(r.unbounded_marker, r.value);
	      });
	m.def("counting",
	      [](PyWord &w, const std::string &symbol, const std::vector<size_t> &Ns,
	         size_t horizon) {
		      auto x = lookup_factor(w.w, {symbol}, horizon);
		      auto rep = counting_and_discrepancy(w.w, x[0], Ns, horizon);
		      std::vector<std::tuple<size_t, size_t, double>> out;
		      for (auto &r : rep.rows)
			      out.push_back({r.N, r.cnt, r.discrepancy});
		      return out;
	      });
	m.def("balance",
	      [](PyWord &w, const std::string &symbol, size_t L_max, size_t horizon) {
		      auto x = lookup_factor(w.w, {symbol}, horizon);
		      return balance_constant(w.w, x[0], L_max, horizon);
	      });

	m.def("pisot_member", [](long a, long b, const std::string &n) {
		return membership_test(make_pisot_unit(Int(a), Int(b)), Int(n));
	});
	m.def("pisot_traces", [](long a, long b, size_t count) {
		std::vector<long long> out;
		for (const Int &t : trace_sequence(make_pisot_unit(Int(a), Int(b)), count))
			out.push_back(small(t));
		return out;
	});

	m.def("lattice_approx",
	      [](Session &s, const std::vector<std::string> &alpha_specs,
	         const std::string &eps, long N) {
		      std::vector<RealValue> alpha;
		      for (auto &spec : alpha_specs)
			      alpha.push_back(s.constant(spec));
		      auto cert = lattice_approx(alpha, s.constant(eps), N);
		      py::dict out;
		      out["d"] = cert.relations.d;
		      out["N"] = cert.relations.N;
		      out["relations"] = cert.relations.members.size();
		      out["rank"] = cert.lattice.rank();
		      std::vector<std::vector<long long>> basis;
		      for (auto &row : cert.lattice.basis) {
			      std::vector<long long> r;
			      for (auto &v : row)
				      r.push_back(small(v));
			      basis.push_back(r);
		      }
		      out["basis"] = basis;
		      out["inclusion_exact"] = cert.inclusion_exact;
		      out["lattice_points"] = cert.lattice_points;
		      out["c_hat"] = to_string(cert.c_hat);
		      return out;
	      });
	m.def("halfspace_cuts", [](const std::vector<std::vector<long long>> &points) {
		std::vector<std::vector<Int>> pts;
		for (auto &p : points) {
			std::vector<Int> row;
			for (long long v : p)
				row.push_back(Int((long)v));
			pts.push_back(row);
		}
		auto fam = halfspace_cuts(pts);
		return std::make_tuple(fam.cuts, fam.bound, fam.within_bound);
	});

	m.def("run_criterion", [](int id) {
		auto r = run_criterion(id);
		return std::make_tuple(r.pass, r.name, r.detail);
	});
}
