#ifndef MLGT_ERRORS_HPP
#define MLGT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mlgt {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument or parameter outside the supported domain.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// A numerical method failed to converge or the result is not representable.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// An internal consistency assertion failed (e.g. two certified results disagree).
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace mlgt

#endif  // MLGT_ERRORS_HPP
