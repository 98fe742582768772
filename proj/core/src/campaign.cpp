#include "dioph/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

namespace dioph {

std::string to_string(CampaignKind k) {
  switch (k) {
    case CampaignKind::Euler: return "euler";
    case CampaignKind::Degree1: return "degree1";
    case CampaignKind::CaseI: return "case-I";
    case CampaignKind::CaseII: return "case-II";
    case CampaignKind::CaseIII: return "case-III";
    case CampaignKind::CaseIV: return "case-IV";
    case CampaignKind::CaseV: return "case-V";
    case CampaignKind::BruteForce: return "brute-force";
  }
  return "?";
}

std::optional<CampaignKind> parse_campaign_kind(const std::string& s) {
  static const std::pair<const char*, CampaignKind> names[] = {
      {"euler", CampaignKind::Euler},     {"degree1", CampaignKind::Degree1},
      {"case-I", CampaignKind::CaseI},    {"I", CampaignKind::CaseI},
      {"case-II", CampaignKind::CaseII},  {"II", CampaignKind::CaseII},
      {"case-III", CampaignKind::CaseIII}, {"III", CampaignKind::CaseIII},
      {"case-IV", CampaignKind::CaseIV},  {"IV", CampaignKind::CaseIV},
      {"case-V", CampaignKind::CaseV},    {"V", CampaignKind::CaseV},
      {"brute-force", CampaignKind::BruteForce},
  };
  for (const auto& [name, kind] : names) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

CampaignSpec CampaignSpec::defaults(CampaignKind kind) {
  CampaignSpec s;
  s.kind = kind;
  s.m_cap = mpz_class("19000000000000000");
  s.r_lo = 2;
  switch (kind) {
    case CampaignKind::Euler:
      s.r_hi = 900153;
      break;
    case CampaignKind::Degree1:
      s.r_hi = 2315167;
      s.a_max = 93595;
      s.ad_max = mpz_class("5360000000000") - 1;
      break;
    case CampaignKind::CaseI:
      s.r_hi = 16023;
      s.ad_max = 256749472;
      s.u_max = mpz_class("4120000000000") - 1;
      break;
    case CampaignKind::CaseII:
      s.r_hi = 10095;
      s.ad_max = 101891096 - 1;
      s.u_max = 257000000 - 1;
      break;
    case CampaignKind::CaseIII:
      s.r_hi = 712;
      s.ad_max = 507075 - 1;
      s.u_max = 2028300 - 1;
      break;
    case CampaignKind::CaseIV:
      s.r_hi = 333;
      s.ad_max = 111360 - 1;
      s.u_max = 111356 - 1;
      break;
    case CampaignKind::CaseV:
      s.r_hi = 16023;
      s.a_max = 3;
      break;
    case CampaignKind::BruteForce:
      s.r_hi = 10000;
      break;
  }
  return s;
}

void CampaignSpec::validate() const {
  auto bad = [](const std::string& m) { throw std::invalid_argument(m); };
  if (r_lo < 2) bad("r-min must be at least 2");
  if (r_hi < r_lo) bad("r-max must not be below r-min");
  if (r_hi >= (std::uint64_t{1} << 32)) bad("r-max must be below 2^32");
  if (shard.total == 0) bad("shard count must be positive");
  if (shard.index >= shard.total) bad("shard index out of range");
  if (precision_floor < 0) bad("precision floor must be non-negative");
  if (kind == CampaignKind::BruteForce) return;
  if (sgn(m_cap) <= 0) bad("m-cap must be positive");
  switch (kind) {
    case CampaignKind::CaseI:
    case CampaignKind::CaseII:
    case CampaignKind::CaseIII:
    case CampaignKind::CaseIV:
      if (sgn(u_max) <= 0) bad("u-max must be positive");
      if (sgn(ad_max) <= 0) bad("ad-max must be positive");
      break;
    case CampaignKind::Degree1:
      if (sgn(ad_max) <= 0) bad("ab-max must be positive");
      if (a_max == 0) bad("a-max must be positive");
      break;
    case CampaignKind::CaseV:
      if (a_max == 0) bad("a-max must be positive");
      break;
    default:
      break;
  }
}

std::string CampaignSpec::id() const {
  std::ostringstream o;
  o << to_string(kind) << " r=" << r_lo << ".." << r_hi << " M=" << m_cap.get_str()
    << " u<=" << u_max.get_str() << " ad<=" << ad_max.get_str() << " a<=" << a_max;
  return o.str();
}

long CampaignSpec::contradiction_threshold() const {
  return kind == CampaignKind::Euler ? 48 : 28;
}

void UnitTally::merge(const UnitTally& o) {
  units += o.units;
  pairs += o.pairs;
  cases += o.cases;
  triples_raw += o.triples_raw;
  triples += o.triples;
  skipped += o.skipped;
  max_j = std::max(max_j, o.max_j);
  for (const auto& [j, n] : o.j_histogram) j_histogram[j] += n;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  std::sort(failures.begin(), failures.end());
}

namespace {

std::vector<std::uint64_t> shard_units(const CampaignSpec& s) {
  std::vector<std::uint64_t> units;
  for (std::uint64_t r = s.r_lo, i = 0; r <= s.r_hi; ++r, ++i) {
    if (i % s.shard.total == s.shard.index) units.push_back(r);
  }
  return units;
}

std::vector<std::string> campaign_notes(const CampaignSpec& s) {
  switch (s.kind) {
    case CampaignKind::Degree1:
      return {"all divisors a of r^2-1 with a <= a-max, both a < b and a > b",
              "no lower bound on b: pairs with b <= 10000 are included"};
    case CampaignKind::CaseI:
    case CampaignKind::CaseII:
    case CampaignKind::CaseIII:
    case CampaignKind::CaseIV:
      return {"third elements C >= 1 outside {A, B}, both orientations of each Pell pair"};
    default:
      return {};
  }
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec, const RunOptions& opt) {
  spec.validate();
  if (spec.kind == CampaignKind::BruteForce) {
    throw std::invalid_argument("brute force search is not a unit campaign");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::uint64_t> units = shard_units(spec);

  CampaignReport rep;
  rep.spec = spec;
  rep.shards = {spec.shard};
  rep.notes = campaign_notes(spec);

  std::uint64_t start = 0;
  if (!opt.checkpoint_path.empty()) {
    if (auto cp = read_checkpoint(opt.checkpoint_path)) {
      if (cp->campaign != spec.id() || cp->shard.index != spec.shard.index ||
          cp->shard.total != spec.shard.total) {
        throw CheckpointError("checkpoint " + opt.checkpoint_path + " belongs to another campaign: " +
                              cp->campaign);
      }
      if (cp->next_unit > units.size()) throw CheckpointError("checkpoint position out of range");
      start = cp->next_unit;
      rep.tally = cp->partial;
    }
  }
  std::uint64_t end = units.size();
  if (opt.stop_after > 0) end = std::min<std::uint64_t>(end, start + opt.stop_after);

  auto save = [&](std::uint64_t next) {
    if (opt.checkpoint_path.empty()) return;
    write_checkpoint(opt.checkpoint_path, Checkpoint{spec.id(), spec.shard, next, rep.tally});
  };
  const std::uint64_t every = std::max<std::uint64_t>(1, opt.checkpoint_every);
  auto absorb = [&](std::uint64_t k, const UnitTally& t) {
    rep.tally.merge(t);
    const std::uint64_t next = k + 1;
    if (next % every == 0 && next < end) save(next);
    if (opt.progress) opt.progress(next, units.size());
  };

  const unsigned workers = std::max(1u, opt.workers);
  if (workers == 1 || end - start <= 1) {
    for (std::uint64_t k = start; k < end; ++k) absorb(k, run_unit(spec, units[k]));
  } else {
    std::atomic<std::uint64_t> next{start};
    std::atomic<bool> abort{false};
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, UnitTally> done;
    std::exception_ptr error;
    auto work = [&] {
      for (;;) {
        const std::uint64_t k = next.fetch_add(1);
        if (k >= end || abort) return;
        try {
          UnitTally t = run_unit(spec, units[k]);
          std::lock_guard<std::mutex> lk(mu);
          done.emplace(k, std::move(t));
        } catch (...) {
          std::lock_guard<std::mutex> lk(mu);
          if (!error) error = std::current_exception();
          abort = true;
        }
        cv.notify_one();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::uint64_t k = start; k < end; ++k) {
      UnitTally t;
      {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] { return error || done.count(k) > 0; });
        if (error) break;
        t = std::move(done.at(k));
        done.erase(k);
      }
      absorb(k, t);
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  save(end);
  rep.complete = end == units.size();
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

CampaignReport run_euler(const CampaignSpec& spec, const RunOptions& opt) {
  if (spec.kind != CampaignKind::Euler) throw std::invalid_argument("not an Euler campaign");
  return run_campaign(spec, opt);
}

CampaignReport run_degree1(const CampaignSpec& spec, const RunOptions& opt) {
  if (spec.kind != CampaignKind::Degree1) throw std::invalid_argument("not a degree-1 campaign");
  return run_campaign(spec, opt);
}

CampaignReport run_case(const CampaignSpec& spec, const RunOptions& opt) {
  switch (spec.kind) {
    case CampaignKind::CaseI:
    case CampaignKind::CaseII:
    case CampaignKind::CaseIII:
    case CampaignKind::CaseIV:
    case CampaignKind::CaseV:
      return run_campaign(spec, opt);
    default:
      throw std::invalid_argument("not a case campaign");
  }
}

CampaignReport merge_reports(std::vector<CampaignReport> parts) {
  if (parts.empty()) throw MergeError("no reports to merge");
  const std::string id = parts.front().spec.id();
  const unsigned total = parts.front().spec.shard.total;
  for (const auto& p : parts) {
    if (p.spec.id() != id) throw MergeError("reports from different campaigns: " + p.spec.id());
    if (p.spec.shard.total != total) throw MergeError("reports disagree on the shard count");
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& x, const auto& y) { return x.spec.shard.index < y.spec.shard.index; });
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].spec.shard.index == parts[i - 1].spec.shard.index) {
      throw MergeError("overlapping shards: index " + std::to_string(parts[i].spec.shard.index) +
                       " appears twice");
    }
  }
  for (unsigned i = 0; i < total; ++i) {
    if (i >= parts.size() || parts[i].spec.shard.index != i) {
      throw MergeError("missing shard " + std::to_string(i) + " of " + std::to_string(total));
    }
  }
  CampaignReport out;
  out.spec = parts.front().spec;
  out.spec.shard = Shard{};
  out.notes = parts.front().notes;
  for (const auto& p : parts) {
    out.tally.merge(p.tally);
    out.wall_time_s += p.wall_time_s;
    out.complete = out.complete && p.complete;
    out.shards.push_back(p.spec.shard);
  }
  return out;
}

}  // namespace dioph
