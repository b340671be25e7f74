#pragma once

#include <stdexcept>
#include <string>

namespace wcifano {

// Base for all structured errors raised by the library.  The CLI maps these
// to exit code 2 (data / usage problems) as opposed to exit code 1
// (verification ran and found a mismatch).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A torus stratum meets X in something the closed-form count cannot handle
// (e.g. |J| >= 4 with gcd > 1, or an edge contained in X).
struct AmbiguousStratum : Error { using Error::Error; };

// A stratum point count or flop-curve count came out non-integral.
struct NonIntegralCount : Error { using Error::Error; };

// A stratum entry references a lemma tag the verifier does not know.
struct UnknownLemmaTag : Error { using Error::Error; };

// Local elimination at an L_xy point found no pure linear term to solve for.
struct NotEliminable : Error { using Error::Error; };

// The certificate database lacks a record a certification step needs.
struct IncompleteData : Error { using Error::Error; };

// Database errors.
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct CrossRefError : Error { using Error::Error; };

// Super-rigidity pipeline errors.
struct NonPositiveDPrime : Error { using Error::Error; };
struct NoMatchingFamily : Error { using Error::Error; };

} // namespace wcifano
