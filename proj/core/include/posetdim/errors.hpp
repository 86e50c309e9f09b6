#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetdim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class InvalidBipartition : public Error {
 public:
  using Error::Error;
};

class NotMaximalAntichain : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t partial, std::size_t cap)
      : Error("enumeration cap " + std::to_string(cap) + " exceeded after " +
              std::to_string(partial) + " items"),
        partial_count(partial),
        cap(cap) {}
  std::size_t partial_count;
  std::size_t cap;
};

/// Search engines give up after the configured node budget and report the
/// best interval they proved.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int lo, int hi)
      : Error("search budget exceeded; value lies in [" + std::to_string(lo) +
              ", " + std::to_string(hi) + "]"),
        lo(lo),
        hi(hi) {}
  int lo;
  int hi;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class NotReversible : public Error {
 public:
  using Error::Error;
};

class NotIncomparable : public Error {
 public:
  using Error::Error;
};

class InvalidExtension : public Error {
 public:
  using Error::Error;
};

class InvalidEmbedding : public Error {
 public:
  using Error::Error;
};

class NotReversingRest : public Error {
 public:
  using Error::Error;
};

class ContainsSm : public Error {
 public:
  using Error::Error;
};

class NoValidLabeling : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class NotCovering : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace posetdim
