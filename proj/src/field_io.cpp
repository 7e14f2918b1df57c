#include "cmlab/field_io.hpp"

#include <fstream>
#include <sstream>

#include "cmlab/error.hpp"
#include "json.hpp"

namespace cmlab {

using nlohmann::json;

SampledField parse_field(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("field file is not JSON: ") + e.what());
  }
  for (const char* key : {"n", "N", "L", "values"}) {
    if (!doc.contains(key)) throw Error(ErrorKind::Format, std::string("field file lacks \"") + key + "\"");
  }
  const Grid grid(doc["n"].get<int>(), doc["N"].get<int>(), doc["L"].get<double>());
  const auto& vals = doc["values"];
  if (!vals.is_array() || vals.size() != grid.size()) {
    throw Error(ErrorKind::Format, "field values length " + std::to_string(vals.size()) +
                                       " does not match N^n = " + std::to_string(grid.size()));
  }
  SampledField f(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& v = vals[i];
    if (!v.is_array() || v.size() != 2) throw Error(ErrorKind::Format, "each value must be [re, im]");
    f[i] = {v[0].get<double>(), v[1].get<double>()};
  }
  if (!f.is_finite()) throw Error(ErrorKind::NonFinite, "field contains NaN or Inf");
  return f;
}

std::string serialize_field(const SampledField& f) {
  json doc;
  doc["n"] = f.grid.dimension();
  doc["N"] = f.grid.points();
  doc["L"] = f.grid.side();
  json vals = json::array();
  for (const auto& z : f.values) vals.push_back({z.real(), z.imag()});
  doc["values"] = std::move(vals);
  return doc.dump();
}

SampledField read_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_field(ss.str());
}

void write_field(const std::string& path, const SampledField& f) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Format, "cannot write " + path);
  out << serialize_field(f) << '\n';
}

}  // namespace cmlab
