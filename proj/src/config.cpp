#include "cmlab/config.hpp"

#include <fstream>
#include <sstream>

#include "cmlab/error.hpp"
#include "json.hpp"

namespace cmlab {

using nlohmann::json;

AdmissibleWeight WeightSpec::build() const {
  if (kind == "log") return make_log_weight(b);
  if (kind == "loglog") return make_loglog_weight(b1, b2);
  if (kind == "const") return make_constant_weight();
  throw Error(ErrorKind::Format, "unknown weight kind '" + kind + "'");
}

std::string WeightSpec::describe() const {
  json j = {{"kind", kind}};
  if (kind == "log") j["b"] = b;
  if (kind == "loglog") {
    j["b1"] = b1;
    j["b2"] = b2;
  }
  return j.dump();
}

namespace {

WeightSpec weight_from(const json& j) {
  WeightSpec w;
  w.kind = j.value("kind", std::string("log"));
  if (w.kind == "loglog" || j.contains("b1")) {
    w.kind = j.value("kind", std::string("loglog"));
    w.b1 = j.value("b1", 0.0);
    w.b2 = j.value("b2", 0.0);
  } else {
    w.b = j.value("b", 1.0);
  }
  if (w.kind != "log" && w.kind != "loglog" && w.kind != "const") {
    throw Error(ErrorKind::Format, "unknown weight kind '" + w.kind + "'");
  }
  return w;
}

json config_json(const HarnessConfig& c) {
  json fam = json::object();
  json xw = json::array();
  for (auto k : c.xw_families) xw.push_back(to_string(k));
  fam["xw"] = xw;
  fam["decay"] = {c.decay_lo, c.decay_hi};
  return {{"grid", {{"n", c.dimension}, {"L", c.side}}},
          {"weight", json::parse(c.weight.describe())},
          {"lpfamily_q", c.lpfamily_q},
          {"tgrid", {{"q", c.tgrid_q}}},
          {"families", fam},
          {"symbol", c.symbol},
          {"p", c.p},
          {"s", c.s},
          {"modulation", to_string(c.modulation)}};
}

}  // namespace

WeightSpec parse_weight_spec(const std::string& text) {
  try {
    return weight_from(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("weight spec: ") + e.what());
  }
}

HarnessConfig parse_config(const std::string& text) {
  HarnessConfig c;
  try {
    const json j = json::parse(text);
    if (j.contains("grid")) {
      c.dimension = j["grid"].value("n", c.dimension);
      c.side = j["grid"].value("L", c.side);
    }
    if (j.contains("weight")) c.weight = weight_from(j["weight"]);
    c.lpfamily_q = j.value("lpfamily_q", c.lpfamily_q);
    if (j.contains("tgrid")) c.tgrid_q = j["tgrid"].value("q", c.tgrid_q);
    if (j.contains("families")) {
      const auto& f = j["families"];
      if (f.contains("xw")) {
        c.xw_families.clear();
        for (const auto& k : f["xw"]) c.xw_families.push_back(family_kind_from_string(k));
      }
      if (f.contains("decay")) {
        c.decay_lo = f["decay"].at(0);
        c.decay_hi = f["decay"].at(1);
      }
    }
    c.symbol = j.value("symbol", c.symbol);
    c.p = j.value("p", c.p);
    c.s = j.value("s", c.s);
    const std::string m = j.value("modulation", std::string(to_string(c.modulation)));
    if (m == "unit") {
      c.modulation = Modulation::Unit;
    } else if (m == "alternating") {
      c.modulation = Modulation::Alternating;
    } else {
      throw Error(ErrorKind::Format, "unknown modulation '" + m + "'");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("config: ") + e.what());
  }
  require(!c.xw_families.empty(), "config: families.xw must not be empty");
  require(c.decay_lo > 0.0 && c.decay_hi >= c.decay_lo, "config: bad decay range");
  return c;
}

HarnessConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_json(const HarnessConfig& cfg) { return config_json(cfg).dump(); }

}  // namespace cmlab
