#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regdec/matrix.hpp"

namespace regdec {

struct Assertion {
  std::string name;
  bool passed;
  std::string detail;
};

struct Certificates {
  std::optional<std::pair<std::string, std::string>> equal_columns;
  std::optional<std::size_t> radical_order;
  std::optional<std::size_t> center_dimension;
  std::optional<bool> square_identity;
};

/// Outcome of one scenario. Fields a pipeline never reached stay empty.
struct ScenarioReport {
  std::string scenario;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::string field;
  std::string group;
  std::optional<bool> minimal;
  std::optional<bool> det_is_zero;
  std::optional<std::string> det;
  Certificates certificates;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;
  /// Set when the pipeline stopped early; names the failing step.
  std::optional<std::string> aborted;

  /// Matrices for --dump, keyed by a short file stem. Not serialized.
  std::vector<std::pair<std::string, DecompMatrix>> matrices;

  void check(std::string name, bool passed, std::string detail = {});
  bool passed() const;

  /// "counterexample" when exactly one of minimal and det != 0 holds,
  /// "consistent" when both or neither do, empty when either is unknown.
  /// Computed from the raw fields on every call.
  std::string verdict() const;
};

std::string to_json(const ScenarioReport& r, int indent = 2);
std::string to_json(const std::vector<ScenarioReport>& rs, int indent = 2);
std::string to_text(const ScenarioReport& r);

/// Writes <dir>/<scenario>[-<index>]-<stem>.csv for every matrix; returns
/// the paths written.
std::vector<std::string> dump_matrices(const std::vector<ScenarioReport>& rs, const std::string& dir);

}  // namespace regdec
