#include "cuspforge/config.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>
#include <vector>

namespace cuspforge {
namespace {

enum Kind { kEnum, kNum, kInt, kTol, kList };

struct KeySpec {
  const char* key;
  const char* def;
  Kind kind;
  const char* allowed;  // comma-joined values for kEnum, else ""
};

const std::vector<KeySpec>* schema_for(const std::string& sub) {
  static const std::vector<KeySpec> cusp = {
      {"profile", "exp", kEnum, "exp,cosh,constant,decay-cubic,decay-exp"},
      {"n", "3", kInt, ""},
      {"a", "0", kNum, ""},
      {"rate", "1", kNum, ""},
      {"amplitude", "1", kNum, ""},
      {"v_n", "1", kNum, ""},
      {"window", "10", kNum, ""},
      {"samples", "512", kInt, ""},
      {"tol", "1e-10", kTol, ""},
  };
  static const std::vector<KeySpec> curvature = {
      {"surface", "warped", kEnum, "warped,graph"},
      {"profile", "exp", kEnum, "exp,cosh,constant,decay-cubic,decay-exp"},
      {"a", "0", kNum, ""},
      {"b", "10", kNum, ""},
      {"resolution", "4096", kInt, ""},
      {"half", "10", kNum, ""},
      {"tol", "1e-8", kTol, ""},
  };
  static const std::vector<KeySpec> smooth = {
      {"rate", "2", kNum, ""},
      {"offset", "1", kNum, ""},
      {"samples", "512", kInt, ""},
  };
  static const std::vector<KeySpec> assemble = {
      {"graph", "trivalent", kEnum, "line,chord-line,trivalent,free2"},
      {"schedule", "lambda-powers", kEnum,
       "lambda-powers,cyclic-cover,constant"},
      {"lambda", "2", kNum, ""},
      {"d", "1", kInt, ""},
      {"m", "2", kInt, ""},
      {"n", "2", kInt, ""},
      {"generations", "8", kInt, ""},
      {"block_volume", "1", kNum, ""},
      {"block_diameter", "1", kNum, ""},
      {"t0", "10", kNum, ""},
  };
  static const std::vector<KeySpec> plan_growth = {
      {"budget", "exp2", kEnum, "exp2,constant"},
      {"budget_value", "0.5", kNum, ""},
      {"kappa_inflation", "1", kNum, ""},
      {"generations", "8", kInt, ""},
      {"t_min", "1", kNum, ""},
      {"t_cap", "30", kNum, ""},
      {"block_diameter", "1", kNum, ""},
      {"grid_step", "0.25", kNum, ""},
      {"t_step", "0.125", kNum, ""},
  };
  static const std::vector<KeySpec> cgvd = {
      {"model", "cosh-cusp", kEnum, "cosh-cusp"},
      {"horizon", "20", kNum, ""},
      {"r_max", "10", kNum, ""},
      {"r_step", "0.5", kNum, ""},
      {"n", "3", kInt, ""},
      {"width", "1", kNum, ""},
      {"scale", "2", kNum, ""},
      {"threshold", "1e-6", kNum, ""},
  };
  static const std::vector<KeySpec> geodesic = {
      {"surface", "horn", kEnum, "horn,cylinder"},
      {"waist", "1", kNum, ""},
      {"amplitude", "1", kNum, ""},
      {"rate", "1", kNum, ""},
      {"z0", "0", kNum, ""},
      {"alpha0", "0.35", kNum, ""},
      {"arc", "100", kNum, ""},
      {"tol", "1e-10", kTol, ""},
  };
  static const std::vector<KeySpec> visibility = {
      {"waist", "1", kNum, ""},
      {"amplitude", "1", kNum, ""},
      {"rate", "1", kNum, ""},
      {"z0", "0", kNum, ""},
      {"alpha0", "0.3", kNum, ""},
      {"rows", "6", kInt, ""},
      {"arc_base", "10", kNum, ""},
      {"tol", "1e-6", kTol, ""},
  };
  static const std::vector<KeySpec> invisibility = {
      {"separation", "0.031415926535897931", kNum, ""},
      {"horizons", "5,10,20,40", kList, ""},
      {"tol", "1e-8", kTol, ""},
  };

  if (sub == "cusp") return &cusp;
  if (sub == "curvature") return &curvature;
  if (sub == "smooth") return &smooth;
  if (sub == "assemble") return &assemble;
  if (sub == "plan-growth") return &plan_growth;
  if (sub == "cgvd") return &cgvd;
  if (sub == "geodesic") return &geodesic;
  if (sub == "visibility") return &visibility;
  if (sub == "invisibility") return &invisibility;
  return nullptr;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& s, double* out) {
  if (s.empty()) return false;
  if (s == "inf") {
    *out = std::numeric_limits<double>::infinity();
    return true;
  }
  const char* p = s.c_str();
  char* end = nullptr;
  double v = std::strtod(p, &end);
  if (end != p + s.size()) return false;
  *out = v;
  return true;
}

bool parse_integer(const std::string& s, long* out) {
  if (s.empty()) return false;
  const char* p = s.c_str();
  char* end = nullptr;
  long v = std::strtol(p, &end, 10);
  if (end != p + s.size()) return false;
  *out = v;
  return true;
}

bool enum_allows(const std::string& allowed, const std::string& v) {
  size_t pos = 0;
  while (pos <= allowed.size()) {
    size_t comma = allowed.find(',', pos);
    std::string item = allowed.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item == v) return true;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return false;
}

}  // namespace

std::string ConfigIssue::render() const {
  std::ostringstream os;
  if (kind == Kind::Parse)
    os << "parse error at line " << line << ", column " << column << ": "
       << message;
  else
    os << "validation error at '" << field << "': " << message;
  return os.str();
}

bool RunConfig::has(const std::string& key) const {
  return values.count(key) != 0;
}

std::string RunConfig::get(const std::string& key,
                           const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

double RunConfig::get_num(const std::string& key, double fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  double v = 0.0;
  return parse_number(it->second, &v) ? v : fallback;
}

long RunConfig::get_int(const std::string& key, long fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  long v = 0;
  return parse_integer(it->second, &v) ? v : fallback;
}

std::map<std::string, std::string> config_schema(const std::string& sub) {
  std::map<std::string, std::string> out;
  const auto* table = schema_for(sub);
  if (!table) return out;
  for (const auto& spec : *table) out[spec.key] = spec.def;
  return out;
}

ParseResult parse_config(const std::string& text,
                         const std::string& subcommand) {
  ParseResult result;
  result.config.subcommand = subcommand;

  struct Entry {
    std::string key, value;
    int line;
  };
  std::vector<Entry> entries;

  std::istringstream is(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    size_t hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        result.issues.push_back({ConfigIssue::Kind::Parse, lineno,
                                 (int)(raw.find('[') + 1), "",
                                 "malformed section header"});
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        result.issues.push_back({ConfigIssue::Kind::Parse, lineno,
                                 (int)(raw.find('[') + 1), "",
                                 "empty section name"});
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      result.issues.push_back(
          {ConfigIssue::Kind::Parse, lineno,
           (int)(raw.find_first_not_of(" \t") + 1), "",
           "expected 'key = value'"});
      continue;
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      result.issues.push_back({ConfigIssue::Kind::Parse, lineno, 1, "",
                               "missing key before '='"});
      continue;
    }
    if (!section.empty()) key = section + "." + key;
    entries.push_back({key, value, lineno});
  }

  const auto* table = schema_for(subcommand);
  if (!table) {
    result.issues.push_back({ConfigIssue::Kind::Validation, 0, 0, "subcommand",
                             "unknown subcommand '" + subcommand + "'"});
    return result;
  }

  // Section prefixes matching the subcommand are equivalent to bare keys.
  for (auto& e : entries) {
    std::string prefix = subcommand + ".";
    if (e.key.rfind(prefix, 0) == 0) e.key = e.key.substr(prefix.size());
  }

  for (const auto& e : entries) {
    if (result.config.values.count(e.key)) {
      std::ostringstream os;
      os << "duplicate key (line " << e.line << ")";
      result.issues.push_back(
          {ConfigIssue::Kind::Validation, e.line, 0, e.key, os.str()});
      continue;
    }
    const KeySpec* spec = nullptr;
    for (const auto& s : *table)
      if (e.key == s.key) {
        spec = &s;
        break;
      }
    if (!spec) {
      result.issues.push_back({ConfigIssue::Kind::Validation, e.line, 0, e.key,
                               "unknown key for subcommand '" + subcommand +
                                   "'"});
      continue;
    }
    switch (spec->kind) {
      case kEnum:
        if (!enum_allows(spec->allowed, e.value))
          result.issues.push_back({ConfigIssue::Kind::Validation, e.line, 0,
                                   e.key,
                                   "value '" + e.value + "' not in {" +
                                       spec->allowed + "}"});
        break;
      case kNum: {
        double v;
        if (!parse_number(e.value, &v))
          result.issues.push_back({ConfigIssue::Kind::Validation, e.line, 0,
                                   e.key, "expected a number, got '" + e.value +
                                              "'"});
        break;
      }
      case kInt: {
        long v;
        if (!parse_integer(e.value, &v))
          result.issues.push_back({ConfigIssue::Kind::Validation, e.line, 0,
                                   e.key, "expected an integer, got '" +
                                              e.value + "'"});
        break;
      }
      case kTol: {
        double v;
        if (!parse_number(e.value, &v) || !(v >= 1e-12 && v <= 1e-4))
          result.issues.push_back(
              {ConfigIssue::Kind::Validation, e.line, 0, e.key,
               "tolerance must lie in [1e-12, 1e-4], got '" + e.value + "'"});
        break;
      }
      case kList: {
        std::istringstream ls(e.value);
        std::string item;
        bool ok = !e.value.empty();
        while (ok && std::getline(ls, item, ',')) {
          double v;
          if (!parse_number(trim(item), &v)) ok = false;
        }
        if (!ok)
          result.issues.push_back({ConfigIssue::Kind::Validation, e.line, 0,
                                   e.key,
                                   "expected a comma-separated number list, "
                                   "got '" +
                                       e.value + "'"});
        break;
      }
    }
    result.config.values[e.key] = e.value;
  }

  for (const auto& spec : *table)
    if (!result.config.values.count(spec.key))
      result.config.values[spec.key] = spec.def;

  return result;
}

}  // namespace cuspforge
