#include "fdmac/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>

#include "fdmac/analytic.hpp"

namespace fdmac {

std::string_view to_string(Preset preset) { return preset == Preset::dca ? "dca" : "fair"; }

std::optional<Preset> parse_preset(std::string_view text) {
  if (text == "dca") return Preset::dca;
  if (text == "fair") return Preset::fair;
  return std::nullopt;
}

NetworkConfig Scenario::network() const {
  if (!preset) {
    return {.fd_count = fd_count, .hd_count = hd_count, .p_ap = p_ap, .p_fd = p_fd, .p_hd = p_hd};
  }
  return *preset == Preset::dca ? dca_config(fd_count, hd_count)
                                : fairness_config(fd_count, hd_count);
}

std::string Scenario::label() const {
  return preset ? std::string(to_string(*preset)) : std::string("explicit");
}

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ScenarioError("unknown field '" + key + "' in " + std::string(where));
    }
  }
}

int count_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ScenarioError(std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ScenarioError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<int>();
}

double prob_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ScenarioError(std::string("missing field '") + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) throw ScenarioError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::uint64_t positive_field(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw ScenarioError(std::string("sim field '") + key + "' must be a positive integer");
  }
  return v.get<std::uint64_t>();
}

SimSettings parse_sim(const json& obj) {
  if (!obj.is_object()) throw ScenarioError("'sim' must be an object");
  reject_unknown(obj, {"slots", "warmup", "capacity", "seed", "backlog"}, "sim");
  SimSettings s;
  if (obj.contains("slots")) s.slots = positive_field(obj, "slots");
  if (obj.contains("warmup")) s.warmup = positive_field(obj, "warmup");
  if (obj.contains("capacity")) s.capacity = positive_field(obj, "capacity");
  if (obj.contains("seed")) {
    if (!obj.at("seed").is_number_unsigned()) {
      throw ScenarioError("sim field 'seed' must be a non-negative integer");
    }
    s.seed = obj.at("seed").get<std::uint64_t>();
  }
  if (obj.contains("backlog")) {
    const json& b = obj.at("backlog");
    auto policy = b.is_string() ? parse_backlog_policy(b.get<std::string>()) : std::nullopt;
    if (!policy) throw ScenarioError("sim field 'backlog' must be \"saturated\" or \"fixed\"");
    s.backlog = *policy;
  }
  return s;
}

}  // namespace

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");
  Scenario s;
  if (doc.contains("preset")) {
    reject_unknown(doc, {"preset", "m", "n", "sim"}, "preset scenario");
    const json& p = doc.at("preset");
    auto preset = p.is_string() ? parse_preset(p.get<std::string>()) : std::nullopt;
    if (!preset) throw ScenarioError("'preset' must be \"dca\" or \"fair\"");
    s.preset = preset;
  } else {
    reject_unknown(doc, {"m", "n", "p_A", "p_F", "p_H", "sim"}, "explicit scenario");
    s.p_ap = prob_field(doc, "p_A");
    s.p_fd = prob_field(doc, "p_F");
    s.p_hd = prob_field(doc, "p_H");
  }
  s.fd_count = count_field(doc, "m");
  s.hd_count = count_field(doc, "n");
  if (doc.contains("sim")) s.sim = parse_sim(doc.at("sim"));
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
  return parse_scenario(doc);
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), end);
}

double round12(double value) {
  const std::string text = format_number(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

std::vector<int> SweepSpec::fd_counts_or_all() const {
  if (!fd_counts.empty()) return fd_counts;
  std::vector<int> all;
  for (int m = 0; m <= total_stations; ++m) all.push_back(m);
  return all;
}

std::vector<std::string> check(const SweepSpec& spec) {
  std::vector<std::string> problems;
  if (spec.total_stations < 1) problems.push_back("total stations must be at least 1");
  if (spec.presets.empty()) problems.push_back("at least one preset is required");
  for (int m : spec.fd_counts) {
    if (m < 0 || m > spec.total_stations) {
      problems.push_back("m=" + std::to_string(m) + " is outside [0, " +
                         std::to_string(spec.total_stations) + "]");
    }
  }
  return problems;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  if (auto problems = check(spec); !problems.empty()) throw ScenarioError(problems.front());

  // Presets and FD counts are sorted so the row order never depends on how
  // they were listed.
  const std::set<Preset> presets(spec.presets.begin(), spec.presets.end());
  const std::set<int> fd_counts = [&] {
    auto v = spec.fd_counts_or_all();
    return std::set<int>(v.begin(), v.end());
  }();

  std::vector<SweepRow> rows;
  for (Preset preset : presets) {
    for (int m : fd_counts) {
      const int n = spec.total_stations - m;
      NetworkConfig c = preset == Preset::dca ? dca_config(m, n) : fairness_config(m, n);
      rows.push_back({std::string(to_string(preset)), c, throughputs(c)});
    }
  }
  return rows;
}

std::string csv_header() {
  return "preset,m,n,p_A,p_F,p_H,p,hd_down,hd_up,fd_down,fd_up,sum,"
         "hd_down_total,hd_up_total,fd_down_total,fd_up_total";
}

std::string csv_row(const SweepRow& row) {
  const NetworkConfig& c = row.config;
  const ThroughputReport& r = row.report;
  std::string out = row.label + "," + std::to_string(c.fd_count) + "," + std::to_string(c.hd_count);
  for (double v : {c.p_ap, c.p_fd, c.p_hd, r.head_fraction, r.hd_down, r.hd_up, r.fd_down,
                   r.fd_up, r.sum, r.hd_down * c.hd_count, r.hd_up * c.hd_count,
                   r.fd_down * c.fd_count, r.fd_up * c.fd_count}) {
    out += "," + format_number(v);
  }
  return out;
}

}  // namespace fdmac
