#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dioph/tuple.hpp"

namespace dioph {

enum class CampaignKind { Euler, Degree1, CaseI, CaseII, CaseIII, CaseIV, CaseV, BruteForce };

std::string to_string(CampaignKind k);
// Accepts the names printed by to_string plus roman numerals ("IV") for cases.
std::optional<CampaignKind> parse_campaign_kind(const std::string& s);

struct Shard {
  unsigned index = 0;
  unsigned total = 1;
};

// All caps are inclusive maxima; strict published caps are stored as cap - 1.
struct CampaignSpec {
  CampaignKind kind = CampaignKind::Euler;
  std::uint64_t r_lo = 2;
  std::uint64_t r_hi = 2;
  mpz_class m_cap;    // Baker-Davenport M
  mpz_class u_max;    // U_q <= u_max (Cases I-IV)
  mpz_class ad_max;   // a d <= ad_max (Cases I-IV), a b <= ad_max (Degree1)
  std::uint64_t a_max = 0;  // a <= a_max (Degree1, CaseV)
  Shard shard;
  long precision_floor = 0;

  // Published parameters of each campaign.
  static CampaignSpec defaults(CampaignKind kind);

  // Throws std::invalid_argument.
  void validate() const;
  // Identifies the campaign independently of the shard.
  std::string id() const;
  long contradiction_threshold() const;
};

struct Failure {
  std::uint64_t unit = 0;
  std::string triple;
  std::string message;

  friend bool operator<(const Failure& x, const Failure& y) {
    return std::tie(x.unit, x.triple, x.message) < std::tie(y.unit, y.triple, y.message);
  }
  friend bool operator==(const Failure&, const Failure&) = default;
};

// Counts for a set of work units. Merging is associative and commutative
// up to failure ordering, which is normalized by sorting.
struct UnitTally {
  std::uint64_t units = 0;
  std::uint64_t pairs = 0;          // ordered (a, d) or (a, r) pairs within the caps
  std::uint64_t cases = 0;          // sign cases (Degree1, CaseV)
  std::uint64_t triples_raw = 0;    // constructed, duplicates included
  std::uint64_t triples = 0;        // distinct sorted triples, each reduced once
  std::uint64_t skipped = 0;        // degenerate constructions (non-positive or repeated entries)
  long max_j = -1;
  std::map<long, std::uint64_t> j_histogram;
  std::vector<Failure> failures;

  void merge(const UnitTally& o);
};

struct CampaignReport {
  CampaignSpec spec;
  UnitTally tally;
  // metadata, excluded from the deterministic payload
  double wall_time_s = 0;
  bool complete = true;
  std::vector<Shard> shards;
  std::vector<std::string> notes;

  bool success() const {
    return tally.failures.empty() && tally.max_j < spec.contradiction_threshold();
  }
};

struct RunOptions {
  unsigned workers = 1;
  std::string checkpoint_path;           // empty: no checkpoints
  std::uint64_t checkpoint_every = 1000;  // units
  std::uint64_t stop_after = 0;          // stop after this many units (0: run to the end)
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Checkpoint {
  static constexpr int kFormatVersion = 1;
  std::string campaign;     // CampaignSpec::id()
  Shard shard;
  std::uint64_t next_unit = 0;  // position in this shard's unit sequence
  UnitTally partial;
};

// Throws CheckpointError on I/O or format problems.
void write_checkpoint(const std::string& path, const Checkpoint& c);
std::optional<Checkpoint> read_checkpoint(const std::string& path);

// Receives each distinct triple of a unit before it is reduced.
using TripleSink = std::function<void(std::uint64_t unit, const DiophantineTriple& t)>;

// Enumeration for a single unit (one r or R) without the worker machinery.
UnitTally run_unit(const CampaignSpec& spec, std::uint64_t r, const TripleSink& sink = {});

CampaignReport run_campaign(const CampaignSpec& spec, const RunOptions& opt = {});
CampaignReport run_euler(const CampaignSpec& spec, const RunOptions& opt = {});
CampaignReport run_degree1(const CampaignSpec& spec, const RunOptions& opt = {});
CampaignReport run_case(const CampaignSpec& spec, const RunOptions& opt = {});

class MergeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parts must be the shards 0..total-1 of one campaign, each exactly once.
CampaignReport merge_reports(std::vector<CampaignReport> parts);

// Deterministic payload (spec and tallies) as JSON; metadata separate.
std::string report_payload_json(const CampaignReport& r);
std::string report_json(const CampaignReport& r);
// Inverse of report_json. Throws std::invalid_argument on malformed input.
CampaignReport parse_report_json(const std::string& text);
std::string report_csv_header();
std::string report_csv_row(const CampaignReport& r);
std::string report_text(const CampaignReport& r);

// ---- exhaustive search -------------------------------------------------------

struct FoundTuple {
  std::vector<std::uint64_t> elements;  // sorted
  bool regular = false;                 // quadruples: largest == d+(other three)
};

struct SearchResult {
  std::uint64_t limit = 0;
  std::uint64_t pairs = 0;
  std::vector<FoundTuple> triples, quadruples, quintuples;
};

// All Diophantine triples, quadruples and quintuples with entries <= limit.
SearchResult brute_force_search(std::uint64_t limit);

}  // namespace dioph
