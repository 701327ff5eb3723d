#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxrep {

// Base class for all library-reported errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadEncoding final : public Error {
 public:
  using Error::Error;
};

class SymbolTooRare final : public Error {
 public:
  using Error::Error;
};

// The MCS constraint fails the subsequence test against some host.
class ConstraintNotCommon final : public Error {
 public:
  ConstraintNotCommon(std::size_t host_index, const std::string& what)
      : Error(what), host_index_(host_index) {}
  std::size_t host_index() const { return host_index_; }

 private:
  std::size_t host_index_;
};

class GapOutOfRange final : public Error {
 public:
  using Error::Error;
};

class AnchorMismatch final : public Error {
 public:
  using Error::Error;
};

class PipelineInvariantViolated final : public Error {
 public:
  using Error::Error;
};

class TooFewOccurrences final : public Error {
 public:
  using Error::Error;
};

class MalformedTuple final : public Error {
 public:
  using Error::Error;
};

class NotKRepeating final : public Error {
 public:
  using Error::Error;
};

class SymbolNotInSeed final : public Error {
 public:
  using Error::Error;
};

class EmptySeed final : public Error {
 public:
  using Error::Error;
};

class InvalidK final : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge final : public Error {
 public:
  using Error::Error;
};

}  // namespace maxrep
