#pragma once

#include <stdexcept>
#include <string>

namespace procp {

// Every precondition violation or unrecoverable condition in the library is
// reported as an Error carrying one of these codes.  Callers that need to
// branch on the condition (the CLI exit-code mapping, tests) should use
// code(), not string matching.
enum class errc {
    composite_modulus,    // linear algebra requested over a non-prime modulus
    dimension_mismatch,   // vector/matrix shapes or contexts disagree
    syntax_error,         // malformed word or input document
    unknown_generator,    // word references an undeclared generator
    non_prime_p,          // presentation prime p is not prime
    truncation_too_small, // truncation degree N < 2
    degree_out_of_range,  // graded degree outside [0, N]
    degree_overflow,      // graded product would exceed the truncation degree
    identity_element,     // operation undefined on the identity (weight TOP)
    identity_relator,     // a relator is trivial modulo the truncation
    trivial_extension,    // radical extension collapses (a is already a p-th power)
    no_root_of_unity,     // field lacks a primitive p-th root of unity (p does not divide q-1)
    bad_field,            // field spec is not a prime power / unsupported
    resource_cap,         // configured work or size cap exceeded
    truncation_exhausted, // requested filtration level carries no information below the truncation
    internal_invariant,   // a proven invariant failed: implementation bug, aborts the analysis
    io_error,             // file could not be read
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::composite_modulus: return "composite_modulus";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::syntax_error: return "syntax_error";
    case errc::unknown_generator: return "unknown_generator";
    case errc::non_prime_p: return "non_prime_p";
    case errc::truncation_too_small: return "truncation_too_small";
    case errc::degree_out_of_range: return "degree_out_of_range";
    case errc::degree_overflow: return "degree_overflow";
    case errc::identity_element: return "identity_element";
    case errc::identity_relator: return "identity_relator";
    case errc::trivial_extension: return "trivial_extension";
    case errc::no_root_of_unity: return "no_root_of_unity";
    case errc::bad_field: return "bad_field";
    case errc::resource_cap: return "resource_cap";
    case errc::truncation_exhausted: return "truncation_exhausted";
    case errc::internal_invariant: return "internal_invariant";
    case errc::io_error: return "io_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace procp
