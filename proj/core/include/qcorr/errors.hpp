#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcorr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range parameters, non-Hermitian input, bad sizes.
class InputError : public Error {
 public:
  using Error::Error;
};

// A matrix that is not a density matrix (negative spectrum beyond tolerance).
class InvalidStateError : public Error {
 public:
  InvalidStateError(const std::string& what, double most_negative_eigenvalue)
      : Error(what), most_negative_eigenvalue_(most_negative_eigenvalue) {}

  double most_negative_eigenvalue() const noexcept { return most_negative_eigenvalue_; }

 private:
  double most_negative_eigenvalue_;
};

// Density matrix without X shape; carries the (row, col) of every offending entry.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& what, std::vector<std::pair<int, int>> offending)
      : Error(what), offending_(std::move(offending)) {}

  const std::vector<std::pair<int, int>>& offending_entries() const noexcept { return offending_; }

 private:
  std::vector<std::pair<int, int>> offending_;
};

// Measurement outcome with vanishing probability; its conditional state is undefined.
class DegenerateOutcomeError : public Error {
 public:
  using Error::Error;
};

// Analytic derivative evaluated where a log argument or denominator vanishes.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

class RootNotFoundError : public Error {
 public:
  using Error::Error;
};

// Kraus set violating completeness.
class ChannelError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcorr
