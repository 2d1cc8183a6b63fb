#pragma once

#include "words.hpp"

#include <map>
#include <string>

namespace bw {

/* Named fields, constants, and words accumulated from definition files.
 * Declaration grammar, one per line:
 *   field <name> : <integer polynomial in x> in [<rat>,<rat>]
 *   word <name> = <constructor or combinator pipeline>
 * The most recently declared field becomes the ambient field resolving
 * sqrt(u)/phi inside expressions. */
class Session {
public:
	Session(); /* preloads the builtin word catalog */

	void load_defs_file(const std::string &path);
	void load_defs_line(const std::string &line);

	/* GP expression in the ambient field with declared constants. */
	ExprPtr expr(const std::string &src) const;
	/* Variable- and parameter-free expression evaluated exactly. */
	RealValue constant(const std::string &src) const;
	/* Named word or inline constructor call. */
	WordPtr word(const std::string &name_or_call);

	const FieldPtr &ambient() const { return ambient_; }

private:
	FieldPtr ambient_;
	std::map<std::string, FieldPtr> fields_;
	std::map<std::string, RealValue> constants_;
	std::map<std::string, WordPtr> words_;

	void define_named_field(const std::string &name, const std::string &poly,
	                        const std::string &lo, const std::string &hi);
	WordPtr make_word(const std::string &call);
	IntervalSet intervals(const std::string &src) const;
};

}
