#include "capdisc/errors.hpp"

namespace capdisc {

namespace {
std::string describe_non_unit(double norm, std::size_t line) {
  std::string msg = "point is not on the unit sphere (norm " + std::to_string(norm) + ")";
  if (line != 0) msg += " at line " + std::to_string(line);
  return msg;
}
}  // namespace

NonUnitPoint::NonUnitPoint(double norm, std::size_t line)
    : std::invalid_argument(describe_non_unit(norm, line)), norm_(norm), line_(line) {}

MalformedRow::MalformedRow(std::size_t line, const std::string& detail)
    : std::runtime_error("malformed row at line " + std::to_string(line) + ": " + detail), line_(line) {}

SizeLimitExceeded::SizeLimitExceeded(std::size_t size, std::size_t limit)
    : std::length_error("point set of size " + std::to_string(size) + " exceeds limit " + std::to_string(limit)),
      size_(size),
      limit_(limit) {}

}  // namespace capdisc
