#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "dioph/campaign.hpp"

namespace dioph {

namespace {

using ojson = nlohmann::ordered_json;

ojson tally_json(const UnitTally& t) {
  ojson j;
  j["units"] = t.units;
  j["pairs_checked"] = t.pairs;
  j["cases"] = t.cases;
  j["triples_raw"] = t.triples_raw;
  j["triples_checked"] = t.triples;
  j["skipped"] = t.skipped;
  j["max_j_threshold"] = t.max_j;
  ojson h = ojson::object();
  for (const auto& [k, n] : t.j_histogram) h[std::to_string(k)] = n;
  j["j_histogram"] = h;
  ojson f = ojson::array();
  for (const auto& x : t.failures) f.push_back({{"unit", x.unit}, {"triple", x.triple}, {"message", x.message}});
  j["failures"] = f;
  return j;
}

UnitTally tally_from(const ojson& j) {
  UnitTally t;
  t.units = j.at("units").get<std::uint64_t>();
  t.pairs = j.at("pairs_checked").get<std::uint64_t>();
  t.cases = j.at("cases").get<std::uint64_t>();
  t.triples_raw = j.at("triples_raw").get<std::uint64_t>();
  t.triples = j.at("triples_checked").get<std::uint64_t>();
  t.skipped = j.at("skipped").get<std::uint64_t>();
  t.max_j = j.at("max_j_threshold").get<long>();
  for (const auto& [k, n] : j.at("j_histogram").items()) t.j_histogram[std::stol(k)] = n.get<std::uint64_t>();
  for (const auto& x : j.at("failures")) {
    t.failures.push_back(Failure{x.at("unit").get<std::uint64_t>(), x.at("triple").get<std::string>(),
                                 x.at("message").get<std::string>()});
  }
  return t;
}

ojson payload(const CampaignReport& r) {
  const CampaignSpec& s = r.spec;
  ojson j;
  j["campaign"] = to_string(s.kind);
  j["spec"] = {{"r_lo", s.r_lo},
               {"r_hi", s.r_hi},
               {"m_cap", s.m_cap.get_str()},
               {"u_max", s.u_max.get_str()},
               {"ad_max", s.ad_max.get_str()},
               {"a_max", s.a_max}};
  j["contradiction_threshold"] = s.contradiction_threshold();
  const ojson t = tally_json(r.tally);
  for (const auto& [k, v] : t.items()) j[k] = v;
  j["success"] = r.success();
  return j;
}

ojson metadata(const CampaignReport& r) {
  ojson shards = ojson::array();
  for (const auto& s : r.shards) shards.push_back({{"index", s.index}, {"total", s.total}});
  return {{"wall_time_s", r.wall_time_s},
          {"complete", r.complete},
          {"precision_floor", r.spec.precision_floor},
          {"shards", shards},
          {"notes", r.notes}};
}

}  // namespace

std::string report_payload_json(const CampaignReport& r) { return payload(r).dump(2); }

std::string report_json(const CampaignReport& r) {
  ojson j;
  j["payload"] = payload(r);
  j["metadata"] = metadata(r);
  return j.dump(2) + "\n";
}

CampaignReport parse_report_json(const std::string& text) {
  try {
    const ojson j = ojson::parse(text);
    const ojson& p = j.at("payload");
    const ojson& m = j.at("metadata");
    const auto kind = parse_campaign_kind(p.at("campaign").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown campaign " + p.at("campaign").get<std::string>());
    CampaignReport r;
    r.spec.kind = *kind;
    const ojson& s = p.at("spec");
    r.spec.r_lo = s.at("r_lo").get<std::uint64_t>();
    r.spec.r_hi = s.at("r_hi").get<std::uint64_t>();
    r.spec.m_cap = mpz_class(s.at("m_cap").get<std::string>());
    r.spec.u_max = mpz_class(s.at("u_max").get<std::string>());
    r.spec.ad_max = mpz_class(s.at("ad_max").get<std::string>());
    r.spec.a_max = s.at("a_max").get<std::uint64_t>();
    r.spec.precision_floor = m.at("precision_floor").get<long>();
    r.tally = tally_from(p);
    r.wall_time_s = m.at("wall_time_s").get<double>();
    r.complete = m.at("complete").get<bool>();
    for (const auto& x : m.at("shards")) {
      r.shards.push_back(Shard{x.at("index").get<unsigned>(), x.at("total").get<unsigned>()});
    }
    if (r.shards.size() == 1) r.spec.shard = r.shards.front();
    r.notes = m.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string report_csv_header() {
  return "campaign,r_lo,r_hi,units,pairs_checked,cases,triples_raw,triples_checked,skipped,"
         "max_j_threshold,contradiction_threshold,failures,success,wall_time_s";
}

std::string report_csv_row(const CampaignReport& r) {
  const UnitTally& t = r.tally;
  std::ostringstream o;
  o << to_string(r.spec.kind) << ',' << r.spec.r_lo << ',' << r.spec.r_hi << ',' << t.units << ','
    << t.pairs << ',' << t.cases << ',' << t.triples_raw << ',' << t.triples << ',' << t.skipped << ','
    << t.max_j << ',' << r.spec.contradiction_threshold() << ',' << t.failures.size() << ','
    << (r.success() ? "true" : "false") << ',' << std::fixed << std::setprecision(3) << r.wall_time_s;
  return o.str();
}

std::string report_text(const CampaignReport& r) {
  const UnitTally& t = r.tally;
  std::ostringstream o;
  o << "campaign         " << to_string(r.spec.kind) << "  r in [" << r.spec.r_lo << ", " << r.spec.r_hi
    << "]\n";
  o << "units            " << t.units << (r.complete ? "" : " (incomplete)") << "\n";
  o << "pairs checked    " << t.pairs << "\n";
  if (t.cases) o << "sign cases       " << t.cases << "\n";
  o << "triples          " << t.triples << " distinct, " << t.triples_raw << " constructed\n";
  if (t.skipped) o << "skipped          " << t.skipped << "\n";
  o << "max J threshold  " << t.max_j << " (contradiction at " << r.spec.contradiction_threshold() << ")\n";
  o << "J histogram     ";
  for (const auto& [k, n] : t.j_histogram) o << ' ' << k << ':' << n;
  o << "\n";
  o << "failures         " << t.failures.size() << "\n";
  for (const auto& f : t.failures) o << "  r=" << f.unit << ' ' << f.triple << ": " << f.message << "\n";
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  o << "wall time        " << std::fixed << std::setprecision(2) << r.wall_time_s << " s\n";
  o << "result           " << (r.success() ? "SUCCESS" : "FAILURE") << "\n";
  return o.str();
}

void write_checkpoint(const std::string& path, const Checkpoint& c) {
  ojson j;
  j["format_version"] = Checkpoint::kFormatVersion;
  j["campaign"] = c.campaign;
  j["shard"] = {{"index", c.shard.index}, {"total", c.shard.total}};
  j["next_unit"] = c.next_unit;
  j["partial"] = tally_json(c.partial);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw CheckpointError("cannot write checkpoint " + tmp);
    f << j.dump() << "\n";
    f.flush();
    if (!f) throw CheckpointError("cannot write checkpoint " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("cannot replace checkpoint " + path + ": " + ec.message());
}

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    throw CheckpointError("cannot read checkpoint " + path);
  }
  try {
    const ojson j = ojson::parse(f);
    const int version = j.at("format_version").get<int>();
    if (version != Checkpoint::kFormatVersion) {
      throw CheckpointError("unsupported checkpoint format version " + std::to_string(version));
    }
    Checkpoint c;
    c.campaign = j.at("campaign").get<std::string>();
    c.shard.index = j.at("shard").at("index").get<unsigned>();
    c.shard.total = j.at("shard").at("total").get<unsigned>();
    c.next_unit = j.at("next_unit").get<std::uint64_t>();
    c.partial = tally_from(j.at("partial"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError("malformed checkpoint " + path + ": " + e.what());
  }
}

}  // namespace dioph
