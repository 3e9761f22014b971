#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cuspforge {

// One problem found while parsing or validating a config. Parse issues
// carry line/column; validation issues carry the dotted field path.
struct ConfigIssue {
  enum class Kind { Parse, Validation };
  Kind kind = Kind::Validation;
  int line = 0, column = 0;
  std::string field;
  std::string message;

  std::string render() const;
};

// Key-value experiment configuration: UTF-8 lines of `key = value`,
// `[section]` headers prefixing keys as `section.key`, `#` comments.
// Parsing collects every issue instead of stopping at the first.
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_num(const std::string& key, double fallback) const;
  long get_int(const std::string& key, long fallback) const;
};

struct ParseResult {
  RunConfig config;
  std::vector<ConfigIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Tolerances must lie in [1e-12, 1e-4]; keys outside the documented
// vocabulary for the subcommand are validation errors.
ParseResult parse_config(const std::string& text,
                         const std::string& subcommand);

// The documented keys (with defaults where meaningful) for a subcommand;
// used by validation and by `--help` style outputs.
std::map<std::string, std::string> config_schema(
    const std::string& subcommand);

}  // namespace cuspforge
