#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdg {

// Base of every error the library throws. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompositePrimeError : public Error {
 public:
  explicit CompositePrimeError(unsigned long long value)
      : Error("declared prime " + std::to_string(value) + " is not prime"),
        value_(value) {}
  unsigned long long value() const { return value_; }

 private:
  unsigned long long value_;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(unsigned long long requested, unsigned long long cap)
      : Error("size " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  unsigned long long requested() const { return requested_; }
  unsigned long long cap() const { return cap_; }

 private:
  unsigned long long requested_;
  unsigned long long cap_;
};

class NonMonicModulus : public Error {
 public:
  using Error::Error;
};

class WrongRingKind : public Error {
 public:
  using Error::Error;
};

class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotThresholdError : public Error {
 public:
  using Error::Error;
};

class MalformedCode : public Error {
 public:
  using Error::Error;
};

class NotEquitable : public Error {
 public:
  NotEquitable(std::size_t vertex, std::size_t block, const std::string& what)
      : Error(what), vertex_(vertex), block_(block) {}
  std::size_t vertex() const { return vertex_; }
  std::size_t block() const { return block_; }

 private:
  std::size_t vertex_;
  std::size_t block_;
};

class MixedBlock : public Error {
 public:
  MixedBlock(std::size_t block, const std::string& what)
      : Error(what), block_(block) {}
  std::size_t block() const { return block_; }

 private:
  std::size_t block_;
};

// Parser errors carry a 1-based column.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t column, std::vector<std::string> expected,
              const std::string& found);
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

class SemanticError : public Error {
 public:
  SemanticError(std::size_t column, const std::string& what)
      : Error("column " + std::to_string(column) + ": " + what),
        column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace zdg
