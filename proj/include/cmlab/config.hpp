#pragma once

// Run configuration, read from JSON:
//   {"grid": {"n": 1, "L": 16},
//    "weight": {"kind": "log", "b": 1} | {"kind": "loglog", "b1": 1, "b2": 1} | {"kind": "const"},
//    "lpfamily_q": 8,            time-quadrature points per octave for paraproducts
//    "tgrid": {"q": 8},          points per octave for maximal functions and tents
//    "families": {"xw": ["bounded_trig", ...], "decay": [0.02, 0.2]},
//    "symbol": "one", "p": 2, "s": 6, "modulation": "unit" | "alternating"}
// Every key is optional.

#include <string>
#include <vector>

#include "cmlab/families.hpp"
#include "cmlab/paraproducts.hpp"
#include "cmlab/weights.hpp"

namespace cmlab {

struct WeightSpec {
  std::string kind = "log";  // log | loglog | const
  double b = 1.0;
  double b1 = 0.0;
  double b2 = 0.0;

  AdmissibleWeight build() const;
  std::string describe() const;
};

struct HarnessConfig {
  int dimension = 1;
  double side = 16.0;
  WeightSpec weight;
  int lpfamily_q = 8;
  int tgrid_q = 8;
  std::vector<FamilyKind> xw_families{FamilyKind::BoundedTrig, FamilyKind::BmoLogSpike,
                                      FamilyKind::SmoothedStep};
  double decay_lo = 0.02;
  double decay_hi = 0.2;
  std::string symbol = "one";
  double p = 2.0;
  double s = 6.0;
  Modulation modulation = Modulation::Unit;
};

HarnessConfig parse_config(const std::string& json_text);
HarnessConfig read_config(const std::string& path);
/// Canonical JSON echo (sorted keys, full precision).
std::string config_to_json(const HarnessConfig& cfg);

WeightSpec parse_weight_spec(const std::string& json_text);

}  // namespace cmlab
