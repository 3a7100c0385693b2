#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hardy {

class HardyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Divisor does not divide the dividend (caller logic error, not a verdict).
class NotDivisible : public HardyError {
 public:
  using HardyError::HardyError;
};

/// A denominator root lies in the closed unit disk.
class PoleInDisk : public HardyError {
 public:
  using HardyError::HardyError;
};

class ZeroFunction : public HardyError {
 public:
  using HardyError::HardyError;
};

class InvalidBlaschke : public HardyError {
 public:
  using HardyError::HardyError;
};

class UnsupportedCombination : public HardyError {
 public:
  using HardyError::HardyError;
};

class UnknownExample : public HardyError {
 public:
  using HardyError::HardyError;
};

class UnknownSuite : public HardyError {
 public:
  using HardyError::HardyError;
};

/// Parse failure in the symbol language; `offset` is a byte offset into the input.
class SyntaxError : public HardyError {
 public:
  SyntaxError(std::size_t offset, std::string expected)
      : HardyError("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class SemanticError : public HardyError {
 public:
  SemanticError(std::size_t offset, const std::string& what)
      : HardyError("semantic error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hardy
