#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace capdisc {

/// A point whose norm is too far from 1 to be a point of the sphere.
class NonUnitPoint : public std::invalid_argument {
 public:
  NonUnitPoint(double norm, std::size_t line = 0);
  double norm() const { return norm_; }
  std::size_t line() const { return line_; }

 private:
  double norm_;
  std::size_t line_;
};

/// Point files and parsing.
class MalformedRow : public std::runtime_error {
 public:
  MalformedRow(std::size_t line, const std::string& detail);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyPointSet : public std::invalid_argument {
 public:
  EmptyPointSet() : std::invalid_argument("point set is empty") {}
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the brute-force oracle when the input exceeds its size limit.
class SizeLimitExceeded : public std::length_error {
 public:
  SizeLimitExceeded(std::size_t size, std::size_t limit);
  std::size_t size() const { return size_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

}  // namespace capdisc
