#pragma once

#include <stdexcept>
#include <string>

namespace coord {

// Failure categories; the CLI maps these onto exit codes.
enum class ErrorKind {
  Name,        // unknown variable name
  Argument,    // inconsistent or invalid argument
  Shape,       // mismatched variables/alphabets
  Domain,      // numeric argument outside the valid range
  Resource,    // enumeration cap exceeded
  Model,       // a required structural precondition (Markov chain, common part) fails
  Protocol,    // a node strategy violated the message contract
  Composition, // protocol interfaces do not line up
  Data,        // malformed input file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace coord
