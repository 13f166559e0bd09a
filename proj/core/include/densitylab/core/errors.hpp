#pragma once

#include <stdexcept>
#include <string>

namespace dlab {

// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Textual input (rationals, words, codes) could not be parsed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An oracle could not certify what an algorithm needed (e.g. a modulus
// search ran past its cap).
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dlab
