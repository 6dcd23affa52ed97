#pragma once

#include "cflp/solver.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace cflp::cli {

/// Problem-file error carrying the offending field path, e.g. "terms[1].order",
/// or "line N" for syntax errors.
class ProblemParseError : public std::runtime_error {
public:
  ProblemParseError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

FdeProblem parse_problem(const std::string& text);
FdeProblem load_problem(const std::filesystem::path& path);

}  // namespace cflp::cli
