#include "survite/schema.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "survite/common.hpp"

namespace survite {

const char* const SchemaMapping::kRequired[11] = {
    "time", "status", "rx", "age", "wt", "sz",
    "hg",   "sg",     "hx", "ekg", "stage"};

SchemaMapping SchemaMapping::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open schema file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

SchemaMapping SchemaMapping::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("schema: invalid JSON: ") + e.what());
  }
  SchemaMapping m;
  if (!j.contains("columns") || !j["columns"].is_object()) {
    throw InputError("schema: missing \"columns\" object");
  }
  for (auto& [k, v] : j["columns"].items()) {
    m.columns[k] = v.get<std::string>();
  }
  if (j.contains("arm_codes")) {
    for (auto& [k, v] : j["arm_codes"].items()) m.arm_codes[k] = v.get<int>();
  }
  if (j.contains("status_codes")) {
    for (auto& [k, v] : j["status_codes"].items())
      m.status_codes[k] = v.get<int>();
  }
  if (j.contains("recodes")) {
    for (auto& [col, map] : j["recodes"].items()) {
      for (auto& [label, value] : map.items()) {
        m.recodes[col][label] = value.get<double>();
      }
    }
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    if (o.contains("time_shift")) {
      m.options.time_shift = o["time_shift"].get<double>();
    }
    if (o.contains("sz_transform")) {
      const auto s = o["sz_transform"].get<std::string>();
      if (s == "log") {
        m.options.sz_transform = SizeTransform::Log;
      } else if (s == "log1p") {
        m.options.sz_transform = SizeTransform::Log1p;
      } else {
        throw InputError("schema: sz_transform must be \"log\" or \"log1p\"");
      }
    }
    if (o.contains("drop_nonpositive_sz")) {
      m.options.drop_nonpositive_sz = o["drop_nonpositive_sz"].get<bool>();
    }
    if (o.contains("drop_nonpositive_time")) {
      m.options.drop_nonpositive_time = o["drop_nonpositive_time"].get<bool>();
    }
  }
  m.validate();
  return m;
}

void SchemaMapping::validate() const {
  for (const char* logical : kRequired) {
    if (!columns.count(logical)) {
      throw InputError(std::string("schema: missing column mapping for \"") +
                       logical + "\"");
    }
  }
  if (arm_codes.empty()) {
    throw InputError("schema: arm_codes must map at least one dose label");
  }
  for (const auto& [label, code] : arm_codes) {
    if (code != 0 && code != 1) {
      throw InputError("schema: arm code for \"" + label +
                       "\" must be 0 or 1");
    }
  }
  if (status_codes.empty()) {
    throw InputError("schema: status_codes must map at least one label");
  }
  for (const auto& [label, code] : status_codes) {
    if (code != 0 && code != 1) {
      throw InputError("schema: status code for \"" + label +
                       "\" must be 0 or 1");
    }
  }
}

}  // namespace survite
