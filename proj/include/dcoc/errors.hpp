#ifndef DCOC_ERRORS_HPP
#define DCOC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace dcoc {

// Structured error with a stable machine-readable code. The CLI maps these
// to exit code 2 and prints the code verbatim. Codes in use:
//   parse             malformed edge-list input
//   bad_digraph       programmatic digraph construction violation
//   not_semicomplete  input rejected by a semicomplete-only routine
//   invalid_ell       ell < 1
//   bad_args          parameter outside its documented range
//   bad_witness       witness vertex out of range
//   oracle_guard      exhaustive oracle refused (n too large)
//   brute_force_guard definition-level triple enumeration refused
//   overlap           X and X0 are not disjoint
//   family_budget     randomized cover-free family exceeded its size budget
//   family_guard      exhaustive family verification refused (n too large)
//   bad_generator     unknown generator family or invalid parameters
//   bad_arc_flip      flip_one_arc precondition violated
//   internal          broken internal invariant
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

} // namespace dcoc

#endif
