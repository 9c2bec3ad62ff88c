#include "qtoric/json_io.hpp"

#include <sys/file.h>
#include <sys/stat.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qtoric {

namespace {

Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return Int(v.get<std::string>());
  throw QtError("BadInput", "expected an integer, got " + v.dump());
}

Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(int_from_json(v));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw QtError("BadInput", "expected an integer or rational string, got " + v.dump());
}

}  // namespace

Fan fan_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
    throw QtError("BadInput", "fan document needs dim, rays and max_cones");
  Fan f;
  f.dim = j.at("dim").get<std::size_t>();
  for (const auto& ray : j.at("rays")) {
    IntVec v;
    for (const auto& e : ray) v.push_back(int_from_json(e));
    if (v.size() != f.dim) throw QtError("BadInput", "ray length does not match dim");
    f.rays.push_back(std::move(v));
  }
  for (const auto& cone : j.at("max_cones")) {
    std::vector<std::size_t> c;
    for (const auto& e : cone) {
      long long idx = e.get<long long>();
      if (idx < 1 || idx > static_cast<long long>(f.rays.size()))
        throw QtError("BadInput", "ray index out of range (1-based): " + std::to_string(idx));
      c.push_back(static_cast<std::size_t>(idx - 1));
    }
    f.max_cones.push_back(std::move(c));
  }
  return f;
}

json fan_to_json(const Fan& f) {
  json j;
  j["dim"] = f.dim;
  j["rays"] = json::array();
  for (const auto& ray : f.rays) {
    json r = json::array();
    for (const auto& e : ray) r.push_back(e.get_si());
    j["rays"].push_back(r);
  }
  j["max_cones"] = json::array();
  for (const auto& cone : f.max_cones) {
    json c = json::array();
    for (std::size_t i : cone) c.push_back(i + 1);
    j["max_cones"].push_back(c);
  }
  return j;
}

RatVec divisor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw QtError("BadInput", "divisor document needs coeffs");
  RatVec d;
  for (const auto& e : j.at("coeffs")) d.push_back(rat_from_json(e));
  return d;
}

TorusDivisor integral_divisor_from_json(const json& j) {
  RatVec d = divisor_from_json(j);
  TorusDivisor out;
  for (const Rat& e : d) {
    if (e.get_den() != 1)
      throw QtError("BadInput", "divisor must be integral here: " + to_string(e));
    out.push_back(e.get_num());
  }
  return out;
}

json cone_to_json(const POCone& c) {
  json rows = json::array();
  for (const auto& row : c.constraints) {
    json nrm = json::array();
    for (const auto& e : row.normal) nrm.push_back(to_string(e));
    rows.push_back({{"normal", nrm}, {"strict", row.strict}});
  }
  return {{"constraints", rows}};
}

POCone cone_from_json(const json& j, std::size_t dim) {
  POCone c;
  c.dim = dim;
  for (const auto& row : j.at("constraints")) {
    IntVec nrm;
    for (const auto& e : row.at("normal")) nrm.push_back(int_from_json(e));
    if (nrm.size() != dim) throw QtError("BadInput", "normal length does not match dimension");
    c.add(std::move(nrm), row.at("strict").get<bool>());
  }
  return c;
}

std::string fan_hash(const Fan& f) {
  std::ostringstream canon;
  canon << f.dim << ';';
  for (const auto& ray : f.rays) {
    for (const auto& e : ray) canon << e << ',';
    canon << '|';
  }
  canon << ';';
  for (const auto& cone : f.max_cones) {
    for (std::size_t i : cone) canon << i << ',';
    canon << '|';
  }
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : canon.str()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json obstruction_to_json(const Fan& f, const ObstructionTable& table) {
  json entries = json::array();
  for (const auto& [alpha, cohom] : table.entries) {
    json idx = json::array();
    for (std::size_t i = 0; i < table.num_vertices; ++i)
      if ((alpha >> i) & 1u) idx.push_back(i + 1);
    json rows = json::array();
    for (const auto& [deg, dim] : cohom) rows.push_back({deg, dim});
    entries.push_back({{"alpha", idx}, {"cohomology", rows}});
  }
  return {{"version", 1},
          {"fan_hash", fan_hash(f)},
          {"num_rays", table.num_vertices},
          {"entries", entries}};
}

ObstructionTable obstruction_from_json(const json& j) {
  ObstructionTable table;
  table.num_vertices = j.at("num_rays").get<std::size_t>();
  for (const auto& entry : j.at("entries")) {
    std::uint32_t alpha = 0;
    for (const auto& e : entry.at("alpha"))
      alpha |= 1u << (e.get<std::size_t>() - 1);
    std::vector<std::pair<int, std::size_t>> cohom;
    for (const auto& row : entry.at("cohomology"))
      cohom.emplace_back(row.at(0).get<int>(), row.at(1).get<std::size_t>());
    table.entries[alpha] = std::move(cohom);
  }
  return table;
}

ObstructionTable cached_obstruction_table(const Fan& f, const std::string& cache_dir) {
  if (cache_dir.empty()) return obstruction_table(f);
  ::mkdir(cache_dir.c_str(), 0755);  // best effort; failures surface on open
  std::string path = cache_dir + "/obstruction-" + fan_hash(f) + ".json";
  std::FILE* fp = std::fopen(path.c_str(), "a+");
  if (fp == nullptr) throw QtError("CacheError", "cannot open cache file " + path);
  flock(fileno(fp), LOCK_EX);
  std::fseek(fp, 0, SEEK_END);
  long size = std::ftell(fp);
  if (size > 0) {
    std::string buf(static_cast<std::size_t>(size), '\0');
    std::fseek(fp, 0, SEEK_SET);
    std::size_t got = std::fread(buf.data(), 1, buf.size(), fp);
    buf.resize(got);
    try {
      json doc = json::parse(buf);
      if (doc.at("fan_hash").get<std::string>() == fan_hash(f)) {
        ObstructionTable table = obstruction_from_json(doc);
        flock(fileno(fp), LOCK_UN);
        std::fclose(fp);
        return table;
      }
    } catch (const json::exception&) {
      // corrupt cache entry: fall through and rewrite it
    }
  }
  ObstructionTable table = obstruction_table(f);
  std::string out = obstruction_to_json(f, table).dump(2);
  std::FILE* wp = std::freopen(path.c_str(), "w", fp);
  if (wp != nullptr) {
    std::fwrite(out.data(), 1, out.size(), wp);
    std::fflush(wp);
    flock(fileno(wp), LOCK_UN);
    std::fclose(wp);
  }
  return table;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QtError("BadInput", "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw QtError("BadInput", std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

}  // namespace qtoric
