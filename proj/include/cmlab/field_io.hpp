#pragma once

#include <iosfwd>
#include <string>

#include "cmlab/grid.hpp"

namespace cmlab {

// Field file: {"n": int, "N": int, "L": float, "values": [[re, im], ...]},
// values row-major. Readers reject a values array whose length is not N^n.

SampledField parse_field(const std::string& json_text);
std::string serialize_field(const SampledField& f);

SampledField read_field(const std::string& path);
void write_field(const std::string& path, const SampledField& f);

}  // namespace cmlab
