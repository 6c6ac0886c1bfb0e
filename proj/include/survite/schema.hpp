#pragma once

#include <map>
#include <string>

namespace survite {

// How to turn raw tumor size into the logsz covariate. Log drops or rejects
// non-positive sizes; Log1p keeps them (log(1 + sz)).
enum class SizeTransform { Log, Log1p };

struct PreprocessOptions {
  double time_shift = 0.0;
  SizeTransform sz_transform = SizeTransform::Log;
  bool drop_nonpositive_sz = true;
  bool drop_nonpositive_time = true;
};

// Binding of logical column names to CSV headers, plus the label maps the
// source file needs: dose labels -> arm codes, status labels -> event codes,
// and optional per-column label recodes (e.g. ekg text to its 0-6 ordinal).
struct SchemaMapping {
  std::map<std::string, std::string> columns;       // logical -> header
  std::map<std::string, int> arm_codes;             // rx label -> 0/1
  std::map<std::string, int> status_codes;          // status label -> 0/1
  std::map<std::string, std::map<std::string, double>> recodes;
  PreprocessOptions options;

  static SchemaMapping from_json_file(const std::string& path);
  static SchemaMapping from_json_text(const std::string& text);

  // Logical columns every trial file must provide.
  static const char* const kRequired[11];

  void validate() const;
};

}  // namespace survite
