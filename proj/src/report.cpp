#include "cmlab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "cmlab/error.hpp"
#include "cmlab/numerics.hpp"
#include "json.hpp"

namespace cmlab {

using nlohmann::json;

void RatioReport::finalize() {
  std::vector<double> all;
  for (auto& e : resolutions) {
    std::vector<double> v;
    for (const auto& t : e.trials) v.push_back(t.ratio);
    e.max = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
    e.median = v.empty() ? 0.0 : numerics::median(v);
    all.insert(all.end(), v.begin(), v.end());
  }
  max = all.empty() ? 0.0 : *std::max_element(all.begin(), all.end());
  median = all.empty() ? 0.0 : numerics::median(all);
}

std::vector<double> RatioReport::growth() const {
  std::vector<double> g;
  for (std::size_t i = 1; i < resolutions.size(); ++i) {
    g.push_back(resolutions[i].max / resolutions[i - 1].max - 1.0);
  }
  return g;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

json body(const RatioReport& r) {
  json res = json::array();
  for (const auto& e : r.resolutions) {
    json trials = json::array();
    for (const auto& t : e.trials) {
      trials.push_back({{"trial", t.trial}, {"seed", t.seed}, {"ratio", t.ratio}});
    }
    res.push_back({{"N", e.N}, {"max", e.max}, {"median", e.median}, {"skipped", e.skipped},
                   {"trials", trials}});
  }
  json cfg = r.config.empty() ? json::object() : json::parse(r.config);
  return {{"id", r.id}, {"seed", r.seed},     {"config", cfg},
          {"resolutions", res}, {"max", r.max}, {"median", r.median}};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t report_hash(const RatioReport& r) { return fnv1a(body(r).dump()); }

std::string to_json(const RatioReport& r) {
  json j = body(r);
  char hex[20];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(report_hash(r)));
  j["hash"] = hex;
  j["wall_time_s"] = r.wall_time_s;
  return j.dump(2);
}

std::string to_csv(const RatioReport& r) {
  std::ostringstream out;
  out << "id,N,trial,seed,ratio\n";
  for (const auto& e : r.resolutions) {
    for (const auto& t : e.trials) {
      out << r.id << ',' << e.N << ',' << t.trial << ',' << t.seed << ',' << format_double(t.ratio)
          << '\n';
    }
  }
  return out.str();
}

RatioReport report_from_json(const std::string& text) {
  RatioReport r;
  try {
    const json j = json::parse(text);
    r.id = j.at("id");
    r.seed = j.at("seed");
    r.config = j.value("config", json::object()).dump();
    for (const auto& e : j.at("resolutions")) {
      ResolutionEntry re;
      re.N = e.at("N");
      re.skipped = e.value("skipped", 0);
      for (const auto& t : e.at("trials")) {
        re.trials.push_back({t.at("trial"), t.at("seed"), t.at("ratio")});
      }
      r.resolutions.push_back(std::move(re));
    }
    r.wall_time_s = j.value("wall_time_s", 0.0);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Format, std::string("report: ") + e.what());
  }
  r.finalize();
  return r;
}

RatioReport report_from_csv(const std::string& text) {
  RatioReport r;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "id,N,trial,seed,ratio") {
    throw Error(ErrorKind::Format, "report csv: bad header");
  }
  std::map<int, ResolutionEntry> by_n;
  std::vector<int> order;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string id, n, trial, seed, ratio;
    if (!std::getline(row, id, ',') || !std::getline(row, n, ',') ||
        !std::getline(row, trial, ',') || !std::getline(row, seed, ',') ||
        !std::getline(row, ratio)) {
      throw Error(ErrorKind::Format, "report csv: short row");
    }
    r.id = id;
    const int N = std::stoi(n);
    if (!by_n.count(N)) order.push_back(N);
    auto& e = by_n[N];
    e.N = N;
    e.trials.push_back({std::stoi(trial), std::stoull(seed), std::stod(ratio)});
  }
  for (int N : order) r.resolutions.push_back(by_n[N]);
  r.finalize();
  return r;
}

}  // namespace cmlab
