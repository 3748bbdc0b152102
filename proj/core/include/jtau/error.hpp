#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace jtau {

/* Every failure carries a stable name (used by the CLI verbatim) plus a
   human-readable detail message. */
class Error : public std::runtime_error {
public:
	Error(std::string name, const std::string& detail)
	    : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
	const std::string& name() const { return name_; }

private:
	std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& detail) {
	throw Error(name, detail);
}

inline void require(bool ok, const std::string& name, const std::string& detail) {
	if (!ok) fail(name, detail);
}

/* Result of a property harness: a list of counterexample descriptions,
   empty when every check passed. */
struct CheckReport {
	std::vector<std::string> violations;
	bool ok() const { return violations.empty(); }
};

}  // namespace jtau
