#pragma once

#include <stdexcept>
#include <string>

namespace bw {

enum class errc {
	reducible,
	no_root,
	multiple_roots,
	field_mismatch,
	precision_exhausted,
	hypothesis_violated,
	syntax_error,
	unknown_constant,
	missing_param,
	uncoded_value,
	partition_violation,
	negative_index,
	non_uniform_morphism,
	too_large,
	insufficient_samples,
	not_pisot,
	usage,
};

/* All library failures surface as bw::error carrying a machine-readable
 * code; the CLI maps codes to exit statuses. */
class error : public std::runtime_error {
	errc code_;

public:
	error(errc code, const std::string &what)
	: std::runtime_error(what)
	, code_(code)
	{}

	errc code() const { return code_; }

	const char *code_name() const
	{
		switch (code_) {
		case errc::reducible: return "Reducible";
		case errc::no_root: return "NoRoot";
		case errc::multiple_roots: return "MultipleRoots";
		case errc::field_mismatch: return "FieldMismatch";
		case errc::precision_exhausted: return "PrecisionExhausted";
		case errc::hypothesis_violated: return "HypothesisViolated";
		case errc::syntax_error: return "SyntaxError";
		case errc::unknown_constant: return "UnknownConstant";
		case errc::missing_param: return "MissingParam";
		case errc::uncoded_value: return "UncodedValue";
		case errc::partition_violation: return "PartitionViolation";
		case errc::negative_index: return "NegativeIndex";
		case errc::non_uniform_morphism: return "NonUniformMorphism";
		case errc::too_large: return "TooLarge";
		case errc::insufficient_samples: return "InsufficientSamples";
		case errc::not_pisot: return "NotPisot";
		case errc::usage: return "Usage";
		}
		return "Unknown";
	}

	/* CLI exit code: 3 for precision errors, 2 for usage, 4 otherwise. */
	int exit_code() const
	{
		if (code_ == errc::precision_exhausted)
			return 3;
		if (code_ == errc::usage || code_ == errc::syntax_error)
			return 2;
		return 4;
	}
};

[[noreturn]] inline void fail(errc code, const std::string &what)
{
	throw error(code, what);
}

}
