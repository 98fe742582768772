#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dioph/campaign.hpp"
#include "dioph/linforms.hpp"
#include "dioph/tuple.hpp"

namespace {

using namespace dioph;

enum Exit { kOk = 0, kFailure = 2, kIo = 3, kBadFlags = 4, kQuintuple = 5 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "text";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw IoError("cannot open " + path);
    f << text;
    if (!f) throw IoError("cannot write " + path);
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", out.path, "Report path (default: stdout)");
}

// ---- verify ------------------------------------------------------------------

struct VerifyFlags {
  std::string kind;
  std::string case_id;
  std::optional<std::uint64_t> r_min, r_max, a_max;
  std::string m_cap, u_max, ad_max;
  unsigned shards = 1;
  unsigned shard_index = 0;
  unsigned workers = 1;
  std::string checkpoint;
  std::uint64_t checkpoint_every = 1000;
  std::uint64_t limit = 0;
  std::optional<long> precision_floor;
  bool quiet = false;
  Output out;
};

class Progress {
 public:
  explicit Progress(bool enabled) : enabled_(enabled), t0_(clock::now()), last_(t0_) {}

  void operator()(std::uint64_t done, std::uint64_t total) {
    if (!enabled_) return;
    const auto now = clock::now();
    if (done < total && now - last_ < std::chrono::seconds(1)) return;
    last_ = now;
    if (!first_) first_ = done - 1;
    const double el = std::chrono::duration<double>(now - t0_).count();
    const double rate = (done - *first_) / std::max(el, 1e-9);
    const double eta = rate > 0 ? (total - done) / rate : 0;
    std::fprintf(stderr, "\r%llu/%llu units  %.1f%%  elapsed %.0fs  eta %.0fs   ",
                 static_cast<unsigned long long>(done), static_cast<unsigned long long>(total),
                 100.0 * done / std::max<std::uint64_t>(total, 1), el, eta);
    if (done == total) std::fputc('\n', stderr);
  }

 private:
  using clock = std::chrono::steady_clock;
  bool enabled_;
  clock::time_point t0_, last_;
  std::optional<std::uint64_t> first_;
};

std::string render(const CampaignReport& r, const std::string& format) {
  if (format == "json") return report_json(r);
  if (format == "csv") return report_csv_header() + "\n" + report_csv_row(r) + "\n";
  return report_text(r);
}

mpz_class parse_cap(const std::string& flag, const std::string& v) {
  mpz_class z;
  if (z.set_str(v, 10) != 0 || sgn(z) <= 0) throw CLI::ValidationError(flag, "expected a positive integer");
  return z;
}

CampaignSpec spec_from(const VerifyFlags& f) {
  CampaignKind kind;
  if (f.kind == "case") {
    if (f.case_id.empty()) throw CLI::ValidationError("--id", "required for verify case (I, II, III, IV or V)");
    auto k = parse_campaign_kind(f.case_id);
    if (!k || *k == CampaignKind::Euler || *k == CampaignKind::Degree1 || *k == CampaignKind::BruteForce) {
      throw CLI::ValidationError("--id", "expected I, II, III, IV or V");
    }
    kind = *k;
  } else {
    if (!f.case_id.empty()) throw CLI::ValidationError("--id", "only valid for verify case");
    kind = f.kind == "euler" ? CampaignKind::Euler : CampaignKind::Degree1;
  }
  CampaignSpec s = CampaignSpec::defaults(kind);
  if (f.r_min) s.r_lo = *f.r_min;
  if (f.r_max) s.r_hi = *f.r_max;
  if (f.a_max) s.a_max = *f.a_max;
  if (!f.m_cap.empty()) s.m_cap = parse_cap("--m-cap", f.m_cap);
  if (!f.u_max.empty()) s.u_max = parse_cap("--u-max", f.u_max);
  if (!f.ad_max.empty()) s.ad_max = parse_cap("--ad-max", f.ad_max);
  s.shard = Shard{f.shard_index, f.shards};
  if (f.precision_floor) {
    s.precision_floor = *f.precision_floor;
  } else if (const char* env = std::getenv("DIOPH_PRECISION_FLOOR")) {
    try {
      s.precision_floor = std::stol(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("DIOPH_PRECISION_FLOOR", "expected an integer");
    }
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("verify", e.what());
  }
  return s;
}

int cmd_verify(const VerifyFlags& f) {
  const CampaignSpec spec = spec_from(f);
  Progress progress(!f.quiet);
  RunOptions opt;
  opt.workers = f.workers;
  opt.checkpoint_path = f.checkpoint;
  opt.checkpoint_every = f.checkpoint_every;
  opt.stop_after = f.limit;
  opt.progress = [&](std::uint64_t d, std::uint64_t t) { progress(d, t); };
  CampaignReport rep;
  try {
    rep = run_campaign(spec, opt);
  } catch (const CheckpointError& e) {
    throw IoError(e.what());
  }
  f.out.write(render(rep, f.out.format));
  return rep.success() ? kOk : kFailure;
}

int cmd_merge(const std::vector<std::string>& files, const Output& out) {
  std::vector<CampaignReport> parts;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      parts.push_back(parse_report_json(ss.str()));
    } catch (const std::invalid_argument& e) {
      throw IoError(path + ": " + e.what());
    }
  }
  CampaignReport merged;
  try {
    merged = merge_reports(std::move(parts));
  } catch (const MergeError& e) {
    throw CLI::ValidationError("merge", e.what());
  }
  out.write(render(merged, out.format));
  return merged.success() ? kOk : kFailure;
}

// ---- bounds ------------------------------------------------------------------

std::string kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::Upper: return "upper";
    case ClaimKind::Lower: return "lower";
    case ClaimKind::Approx: return "approx";
  }
  return "?";
}

std::string render_certificates(const std::vector<BoundCertificate>& certs, const std::vector<std::string>& notes,
                                 const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["all_pass"] = all_pass(certs);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : certs) {
      arr.push_back({{"name", c.name},
                     {"claimed", c.claimed},
                     {"recomputed_lo", c.recomputed.lo_d()},
                     {"recomputed_hi", c.recomputed.hi_d()},
                     {"kind", kind_name(c.kind)},
                     {"tolerance", c.tolerance},
                     {"margin", c.margin()},
                     {"pass", c.pass()},
                     {"note", c.note}});
    }
    j["certificates"] = arr;
    j["notes"] = notes;
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  char buf[512];
  if (format == "csv") {
    o << "name,claimed,recomputed_lo,recomputed_hi,kind,tolerance,margin,pass\n";
    for (const auto& c : certs) {
      std::snprintf(buf, sizeof buf, "%s,%.10g,%.10g,%.10g,%s,%g,%.6f,%s\n", c.name.c_str(), c.claimed,
                    c.recomputed.lo_d(), c.recomputed.hi_d(), kind_name(c.kind).c_str(), c.tolerance, c.margin(),
                    c.pass() ? "true" : "false");
      o << buf;
    }
    return o.str();
  }
  for (const auto& c : certs) {
    std::snprintf(buf, sizeof buf, "%-4s  %-40s claimed %-12.6g recomputed %-14.8g %-6s margin %+.4f\n",
                  c.pass() ? "PASS" : "FAIL", c.name.c_str(), c.claimed, c.recomputed.hi_d(),
                  kind_name(c.kind).c_str(), c.margin());
    o << buf;
    if (!c.note.empty()) o << "      " << c.note << "\n";
  }
  for (const auto& n : notes) o << "note: " << n << "\n";
  std::size_t failed = 0;
  for (const auto& c : certs) failed += c.pass() ? 0 : 1;
  o << certs.size() - failed << "/" << certs.size() << " certificates pass\n";
  return o.str();
}

int cmd_bounds(const std::string& which, bool published_lg1, const Output& out) {
  std::vector<BoundCertificate> certs;
  std::vector<std::string> notes;
  Prop2Options p2opt;
  p2opt.published_log_gamma1 = published_lg1;
  if (published_lg1) notes.push_back("diagnostic: published bound on |log gamma_1| (omits 0.46 B_3)");
  if (which == "prop1" || which == "matveev-const") {
    auto r = with_precision_ladder<Prop1Result>([](mpfr_prec_t p) { return prop1_chain(p); });
    for (auto& c : r.certificates) {
      if (which == "prop1" || c.name == "prop1.matveev_coefficient" || c.name == "prop1.w0_factor") {
        certs.push_back(c);
      }
    }
  } else if (which == "prop2") {
    auto r = with_precision_ladder<Prop2Result>([&](mpfr_prec_t p) { return prop2_chain(p2opt, p); });
    certs = r.certificates;
  } else {
    auto r = with_precision_ladder<EulerResult>([&](mpfr_prec_t p) {
      const Prop1Result p1 = prop1_chain(p);
      const Prop2Result p2 = prop2_chain(p2opt, p);
      return euler_case_bounds(p1, p2.h_coef, p);
    });
    certs = r.certificates;
    if (!r.note.empty()) notes.push_back(r.note);
  }
  out.write(render_certificates(certs, notes, out.format));
  return all_pass(certs) ? kOk : kFailure;
}

// ---- triple ------------------------------------------------------------------

int cmd_triple(const std::vector<std::string>& args, const Output& out) {
  if (args.size() != 3) throw CLI::ValidationError("triple", "expected three positive integers");
  mpz_class v[3];
  for (int i = 0; i < 3; ++i) {
    if (v[i].set_str(args[i], 10) != 0 || sgn(v[i]) <= 0) {
      throw CLI::ValidationError("triple", "not a positive integer: " + args[i]);
    }
  }
  std::optional<DiophantineTriple> t;
  try {
    t = DiophantineTriple::make(v[0], v[1], v[2]);
  } catch (const InvalidTuple& e) {
    std::cerr << e.what() << "\n";
    return kBadFlags;
  }
  const bool euler = is_euler_triple(*t);
  const TripleClassification cl = classify(*t);
  const RegularQuadruple q = extend_regular(*t);
  const mpz_class dm = d_minus(*t);
  std::vector<std::string> chain;
  for (const auto& x : cl.chain) chain.push_back(x.str());
  std::vector<std::string> dms;
  for (const auto& x : cl.d_minus_values) dms.push_back(x.get_str());

  if (out.format == "json") {
    nlohmann::ordered_json j;
    j["triple"] = {t->a().get_str(), t->b().get_str(), t->c().get_str()};
    j["valid"] = true;
    j["r"] = t->r().get_str();
    j["s"] = t->s().get_str();
    j["t"] = t->t().get_str();
    j["d_plus"] = q.d.get_str();
    j["d_minus"] = dm.get_str();
    j["euler"] = euler;
    j["degree"] = cl.degree;
    j["chain"] = chain;
    j["d_minus_chain"] = dms;
    j["extension_roots"] = {q.x.get_str(), q.y.get_str(), q.z.get_str()};
    out.write(j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream o;
  o << "triple    " << t->str() << "  valid\n";
  o << "r, s, t   " << t->r() << ", " << t->s() << ", " << t->t() << "\n";
  o << "d+        " << q.d << "\n";
  o << "d-        " << dm << "\n";
  o << "euler     " << (euler ? "yes" : "no") << "\n";
  o << "degree    " << cl.degree << "\n";
  o << "chain    ";
  for (std::size_t i = 0; i < chain.size(); ++i) o << (i ? " -> " : " ") << chain[i];
  o << "\n";
  o << "d- chain ";
  for (const auto& d : dms) o << ' ' << d;
  o << "\n";
  o << "roots     ad+1 = " << q.x << "^2, bd+1 = " << q.y << "^2, cd+1 = " << q.z << "^2\n";
  out.write(o.str());
  return kOk;
}

// ---- search ------------------------------------------------------------------

int cmd_search(std::uint64_t limit, bool list_triples, const Output& out) {
  const SearchResult r = brute_force_search(limit);
  auto elems = [](const FoundTuple& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.elements.size(); ++i) s += (i ? ", " : "") + std::to_string(t.elements[i]);
    return s + "}";
  };
  if (out.format == "json") {
    nlohmann::ordered_json j;
    j["limit"] = r.limit;
    j["pairs"] = r.pairs;
    auto list = [](const std::vector<FoundTuple>& v) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& t : v) a.push_back({{"elements", t.elements}, {"regular", t.regular}});
      return a;
    };
    j["triple_count"] = r.triples.size();
    if (list_triples) j["triples"] = list(r.triples);
    j["quadruples"] = list(r.quadruples);
    j["quintuples"] = list(r.quintuples);
    out.write(j.dump(2) + "\n");
  } else if (out.format == "csv") {
    std::ostringstream o;
    o << "size,elements,regular\n";
    auto rows = [&](const std::vector<FoundTuple>& v) {
      for (const auto& t : v) {
        o << t.elements.size() << ",\"";
        for (std::size_t i = 0; i < t.elements.size(); ++i) o << (i ? " " : "") << t.elements[i];
        o << "\"," << (t.regular ? "true" : "false") << "\n";
      }
    };
    if (list_triples) rows(r.triples);
    rows(r.quadruples);
    rows(r.quintuples);
    out.write(o.str());
  } else {
    std::ostringstream o;
    o << "limit " << r.limit << ": " << r.pairs << " pairs, " << r.triples.size() << " triples, "
      << r.quadruples.size() << " quadruples, " << r.quintuples.size() << " quintuples\n";
    if (list_triples) {
      for (const auto& t : r.triples) o << "triple     " << elems(t) << (t.regular ? "  euler" : "") << "\n";
    }
    for (const auto& t : r.quadruples) o << "quadruple  " << elems(t) << (t.regular ? "  regular" : "  irregular") << "\n";
    for (const auto& t : r.quintuples) o << "QUINTUPLE  " << elems(t) << "\n";
    out.write(o.str());
  }
  return r.quintuples.empty() ? kOk : kQuintuple;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diophantine quintuple verification: campaigns, bound certificates, triple inspection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dioph 0.1.0");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Run a reduction campaign");
  verify->add_option("kind", vf.kind, "euler, degree1 or case")
      ->required()
      ->check(CLI::IsMember({"euler", "degree1", "case"}));
  verify->add_option("--id", vf.case_id, "Case I..V (verify case)");
  verify->add_option("--r-min", vf.r_min, "Smallest r (or R)");
  verify->add_option("--r-max", vf.r_max, "Largest r (or R)");
  verify->add_option("--m-cap", vf.m_cap, "Reduction cap M");
  verify->add_option("--u-max", vf.u_max, "Largest Pell U (Cases I-IV)");
  verify->add_option("--ad-max", vf.ad_max, "Largest product a d (Cases I-IV) or a b (degree1)");
  verify->add_option("--a-max", vf.a_max, "Largest a (degree1, Case V)");
  verify->add_option("--shards", vf.shards, "Number of shards")->check(CLI::PositiveNumber);
  verify->add_option("--shard-index", vf.shard_index, "This shard, 0-based");
  verify->add_option("--workers", vf.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--checkpoint", vf.checkpoint, "Checkpoint file (resumed if present)");
  verify->add_option("--checkpoint-every", vf.checkpoint_every, "Units between checkpoints")
      ->check(CLI::PositiveNumber);
  verify->add_option("--limit", vf.limit, "Stop after this many units");
  verify->add_option("--precision-floor", vf.precision_floor,
                     "Minimum reduction precision in bits (default: $DIOPH_PRECISION_FLOOR)");
  verify->add_flag("-q,--quiet", vf.quiet, "No progress on stderr");
  add_output_flags(verify, vf.out);

  std::vector<std::string> merge_files;
  Output merge_out;
  auto* merge = app.add_subcommand("merge", "Merge JSON reports of the shards of one campaign");
  merge->add_option("reports", merge_files, "JSON report files")->required();
  add_output_flags(merge, merge_out);

  std::string bounds_which;
  bool published_lg1 = false;
  Output bounds_out;
  auto* bounds = app.add_subcommand("bounds", "Certify the bound chains");
  bounds->add_option("chain", bounds_which, "prop1, prop2, euler or matveev-const")
      ->required()
      ->check(CLI::IsMember({"prop1", "prop2", "euler", "matveev-const"}));
  bounds->add_flag("--published-log-gamma1", published_lg1,
                   "Diagnostic: use the published bound on |log gamma_1|");
  add_output_flags(bounds, bounds_out);

  std::vector<std::string> triple_args;
  Output triple_out;
  auto* triple = app.add_subcommand("triple", "Inspect a Diophantine triple");
  triple->add_option("elements", triple_args, "a b c")->required()->expected(3);
  add_output_flags(triple, triple_out);

  std::uint64_t search_max = 0;
  bool list_triples = false;
  Output search_out;
  auto* search = app.add_subcommand("search", "Exhaustive search for tuples with entries <= max");
  search->add_option("--max,--limit", search_max, "Largest element")->required();
  search->add_flag("--triples", list_triples, "Also list triples");
  add_output_flags(search, search_out);

  try {
    app.parse(argc, argv);
    if (*verify) return cmd_verify(vf);
    if (*merge) return cmd_merge(merge_files, merge_out);
    if (*bounds) return cmd_bounds(bounds_which, published_lg1, bounds_out);
    if (*triple) return cmd_triple(triple_args, triple_out);
    if (*search) return cmd_search(search_max, list_triples, search_out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kBadFlags;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kBadFlags;
}
