// Command line front end for the workbench. Eight subcommands cover
// enumeration, avoidance, per-word statistics, distributions, the audit
// suites, bijections, the equidistribution scanner, and the conjecture
// sweep. Every command prints plain text by default and supports --json;
// tabular commands also write --csv files (UTF-8, LF, header row first).
// Exit codes: 0 success (audit mismatches are results, not failures),
// 1 infrastructure failure, 2 usage error, 3 budget refusal.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rgf/equi.hpp"
#include "rgf/formulas.hpp"
#include "rgf/maps.hpp"

namespace {

using nlohmann::json;
using namespace rgf;

constexpr int kSoftBudget = 9;
constexpr int kHardCap = 11;

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int hard_cap() {
  const char* env = std::getenv("RGF_BUDGET");
  if (env == nullptr || *env == '\0') return kHardCap;
  std::string text(env);
  std::size_t used = 0;
  int cap = 0;
  try {
    cap = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || cap < 1)
    throw std::invalid_argument("RGF_BUDGET must be a positive integer, got '" + text + "'");
  return cap;
}

void check_budget(int n, const char* what) {
  const int cap = hard_cap();
  if (n > cap)
    throw BudgetError(std::string(what) + " " + std::to_string(n) + " exceeds the hard cap " +
                      std::to_string(cap) + "; set RGF_BUDGET to raise it");
  if (n > kSoftBudget)
    std::cerr << "warning: " << what << " " << n << " exceeds the default budget "
              << kSoftBudget << "; expect a long run\n";
}

struct Common {
  int threads = 1;
  bool as_json = false;
  std::string csv_path;
};

void add_common(CLI::App* cmd, Common& c, bool with_csv = true) {
  cmd->add_option("--threads", c.threads, "worker threads; output is identical for any value")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--json", c.as_json, "machine-readable output");
  if (with_csv)
    cmd->add_option("--csv", c.csv_path, "also write a CSV file (header row first)");
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << header << "\n";
  for (const std::string& r : rows) out << r << "\n";
  out.flush();
  if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

json dist_to_json(const Distribution& d) {
  json j = json::object();
  for (const auto& [value, count] : d) j[std::to_string(value)] = count;
  return j;
}

std::string dist_to_text(const Distribution& d) {
  std::string s;
  for (const auto& [value, count] : d) {
    if (!s.empty()) s += " ";
    s += std::to_string(value) + ":" + std::to_string(count);
  }
  return s;
}

// ---- enumerate / avoid ----

struct ListingOptions {
  Common common;
  int n = 0;
  std::string patterns;  // empty means every word
  bool count_only = false;
  bool list = false;
};

void run_listing(const char* command, const ListingOptions& opt) {
  check_budget(opt.n, "length");
  std::vector<Pattern> patterns =
      opt.patterns.empty() ? std::vector<Pattern>{} : parse_pattern_list(opt.patterns);
  const bool want_list = opt.list && !opt.count_only;

  std::vector<Word> words;
  BigCount count(0);
  if (want_list || !opt.common.csv_path.empty()) {
    words = avoidance_class(opt.n, patterns);
    count = BigCount(static_cast<long long>(words.size()));
  } else if (patterns.empty()) {
    count = bell(opt.n);
  } else {
    count = count_avoiders(opt.n, patterns, opt.common.threads);
  }

  if (!opt.common.csv_path.empty()) {
    std::vector<std::string> rows;
    rows.reserve(words.size());
    for (const Word& w : words) rows.push_back(to_string(w));
    write_csv(opt.common.csv_path, "word", rows);
  }
  if (opt.common.as_json) {
    json j{{"command", command}, {"n", opt.n}, {"count", count.value()}};
    if (!opt.patterns.empty()) j["patterns"] = opt.patterns;
    if (want_list) {
      json arr = json::array();
      for (const Word& w : words) arr.push_back(to_string(w));
      j["words"] = std::move(arr);
    }
    emit_json(j);
    return;
  }
  if (want_list)
    for (const Word& w : words) std::cout << to_string(w) << "\n";
  else
    std::cout << to_string(count) << "\n";
}

// ---- stats ----

struct StatsOptions {
  Common common;
  std::string word;
  std::string stat;
  bool all = false;
};

void run_stats(const StatsOptions& opt) {
  Word w = parse_word(opt.word);
  std::vector<StatKind> kinds;
  if (opt.stat.empty() || opt.all)
    kinds = all_stat_kinds();
  else
    kinds.push_back(stat_from_name(opt.stat));

  std::vector<std::pair<std::string, long long>> values;
  for (StatKind k : kinds) values.emplace_back(stat_name(k), stat(w, k));

  if (!opt.common.csv_path.empty()) {
    std::vector<std::string> rows;
    for (const auto& [name, value] : values) rows.push_back(name + "," + std::to_string(value));
    write_csv(opt.common.csv_path, "stat,value", rows);
  }
  if (opt.common.as_json) {
    json stats = json::object();
    for (const auto& [name, value] : values) stats[name] = value;
    emit_json(json{{"command", "stats"}, {"word", to_string(w)}, {"stats", std::move(stats)}});
    return;
  }
  std::string line;
  for (const auto& [name, value] : values) {
    if (!line.empty()) line += " ";
    line += name + "=" + std::to_string(value);
  }
  std::cout << line << "\n";
}

// ---- dist ----

struct DistOptions {
  Common common;
  int n = 0;
  std::string patterns;
  std::string stat;
  bool all = false;
};

void run_dist(const DistOptions& opt) {
  check_budget(opt.n, "length");
  std::vector<Pattern> patterns =
      opt.patterns.empty() ? std::vector<Pattern>{} : parse_pattern_list(opt.patterns);
  std::vector<StatKind> kinds;
  if (opt.stat.empty() || opt.all)
    kinds = all_stat_kinds();
  else
    kinds.push_back(stat_from_name(opt.stat));

  std::vector<Word> words = avoidance_class(opt.n, patterns);
  std::vector<std::pair<std::string, Distribution>> dists;
  for (StatKind k : kinds) dists.emplace_back(stat_name(k), distribution(words, k));

  if (!opt.common.csv_path.empty()) {
    std::vector<std::string> rows;
    for (const auto& [name, d] : dists)
      for (const auto& [value, count] : d)
        rows.push_back(name + "," + std::to_string(value) + "," + std::to_string(count));
    write_csv(opt.common.csv_path, "stat,value,count", rows);
  }
  if (opt.common.as_json) {
    json distributions = json::object();
    for (const auto& [name, d] : dists) distributions[name] = dist_to_json(d);
    json j{{"command", "dist"},
           {"n", opt.n},
           {"class_size", words.size()},
           {"distributions", std::move(distributions)}};
    if (!opt.patterns.empty()) j["patterns"] = opt.patterns;
    emit_json(j);
    return;
  }
  for (const auto& [name, d] : dists) {
    std::string body = dist_to_text(d);
    std::cout << name << (body.empty() ? "" : " " + body) << "\n";
  }
}

// ---- audit ----

struct AuditOptions {
  Common common;
  int n_max = 8;
  std::string id;
  bool list = false;
};

json formula_audit_json(const FormulaAudit& a) {
  json rows = json::array();
  for (const FormulaAuditRow& r : a.rows)
    rows.push_back(json{{"n", r.n},
                        {"claimed", r.claimed.value()},
                        {"actual", r.actual.value()},
                        {"in_range", r.in_range},
                        {"match", r.match()}});
  return json{{"id", a.id},           {"class", a.class_id},
              {"variant", a.variant}, {"expected_good", a.expected_good},
              {"n_min", a.n_min},     {"n_max", a.n_max},
              {"all_match_in_range", a.all_match_in_range()},
              {"as_expected", a.as_expected()},
              {"rows", std::move(rows)}};
}

json equi_audit_json(const EquiAudit& a, bool with_distributions) {
  json rows = json::array();
  for (const EquiAuditRow& r : a.rows) {
    json row{{"n", r.n}, {"equal", r.equal}};
    if (with_distributions || !r.equal) {
      row["lhs"] = dist_to_json(r.lhs);
      row["rhs"] = dist_to_json(r.rhs);
    }
    rows.push_back(std::move(row));
  }
  return json{{"id", a.claim.id},
              {"documented", a.claim.documented},
              {"expected_good", a.claim.expected_good},
              {"all_equal", a.all_equal()},
              {"first_mismatch_n", a.first_mismatch_n()},
              {"as_expected", a.as_expected()},
              {"rows", std::move(rows)}};
}

int first_mismatch(const FormulaAudit& a) {
  for (const FormulaAuditRow& r : a.rows)
    if (r.in_range && !r.match()) return r.n;
  return 0;
}

void print_formula_audit_line(const FormulaAudit& a) {
  std::cout << a.id << " " << a.variant << " expected=" << (a.expected_good ? "good" : "bad");
  if (a.all_match_in_range())
    std::cout << " ok";
  else
    std::cout << " diverges first=" << first_mismatch(a);
  std::cout << (a.as_expected() ? " as-expected" : " UNEXPECTED") << "\n";
}

void print_equi_audit_line(const EquiAudit& a) {
  std::cout << a.claim.id << " " << (a.claim.documented ? "documented" : "tracked")
            << " expected=" << (a.claim.expected_good ? "good" : "bad");
  if (a.all_equal())
    std::cout << " ok";
  else
    std::cout << " diverges first=" << a.first_mismatch_n();
  std::cout << (a.as_expected() ? " as-expected" : " UNEXPECTED") << "\n";
}

bool is_formula_id(const std::string& id) {
  for (const FormulaInfo& f : formula_registry())
    if (f.id == id) return true;
  return false;
}

bool is_equi_claim_id(const std::string& id) {
  for (const EquiClaim& c : equi_claims())
    if (c.id == id) return true;
  return false;
}

bool is_class_id(const std::string& id) {
  for (const ClassInfo& c : class_registry())
    if (c.id == id) return true;
  return false;
}

void run_audit_one(const AuditOptions& opt) {
  if (is_formula_id(opt.id)) {
    std::vector<FormulaAudit> all = audit_cardinality(1, opt.n_max, opt.common.threads);
    json out = json::array();
    for (const FormulaAudit& a : all) {
      if (a.id != opt.id) continue;
      if (opt.common.as_json) {
        out.push_back(formula_audit_json(a));
        continue;
      }
      print_formula_audit_line(a);
      for (const FormulaAuditRow& r : a.rows) {
        std::cout << "  n=" << r.n << " claimed=" << to_string(r.claimed)
                  << " actual=" << to_string(r.actual);
        if (!r.in_range)
          std::cout << " (outside claimed range)";
        else if (!r.match())
          std::cout << " MISMATCH";
        std::cout << "\n";
      }
    }
    if (opt.common.as_json)
      emit_json(json{{"command", "audit"}, {"n_max", opt.n_max}, {"cardinality", std::move(out)}});
    return;
  }
  if (is_equi_claim_id(opt.id)) {
    EquiAudit a = audit_equi_claim(equi_claim(opt.id), 1, opt.n_max, opt.common.threads);
    if (opt.common.as_json) {
      emit_json(json{{"command", "audit"},
                     {"n_max", opt.n_max},
                     {"equi_claims", json::array({equi_audit_json(a, opt.list)})}});
      return;
    }
    print_equi_audit_line(a);
    for (const EquiAuditRow& r : a.rows) {
      if (r.equal && !opt.list) {
        std::cout << "  n=" << r.n << " equal\n";
        continue;
      }
      std::cout << "  n=" << r.n << (r.equal ? " equal" : " DIFFER")
                << " lhs={" << dist_to_text(r.lhs) << "} rhs={" << dist_to_text(r.rhs) << "}\n";
    }
    return;
  }
  if (is_class_id(opt.id)) {
    std::vector<BigCount> seq = class_count_sequence(opt.id, 1, opt.n_max, opt.common.threads);
    if (opt.common.as_json) {
      json counts = json::array();
      for (const BigCount& c : seq) counts.push_back(c.value());
      emit_json(json{{"command", "audit"},
                     {"id", opt.id},
                     {"n_max", opt.n_max},
                     {"counts", std::move(counts)}});
      return;
    }
    std::cout << opt.id << " counts n=1.." << opt.n_max << ":";
    for (const BigCount& c : seq) std::cout << " " << to_string(c);
    std::cout << "\n";
    return;
  }
  throw std::out_of_range("unknown audit id: " + opt.id +
                          " (expected a formula id, an equidistribution claim id, or a class id)");
}

void run_audit(const AuditOptions& opt) {
  check_budget(opt.n_max, "length bound");
  if (!opt.id.empty()) {
    run_audit_one(opt);
    return;
  }

  std::vector<FormulaAudit> cards = audit_cardinality(1, opt.n_max, opt.common.threads);
  std::vector<DualityAudit> duality = audit_duality(1, opt.n_max, opt.common.threads);
  std::vector<WilfAudit> wilf = audit_wilf(1, opt.n_max, opt.common.threads);
  std::vector<StatClaimAudit> stat_rows = audit_stat_claims(opt.n_max);
  std::vector<EquiAudit> claims = audit_equi_claims(1, opt.n_max, opt.common.threads);

  int unexpected = 0;
  for (const FormulaAudit& a : cards) unexpected += !a.as_expected();
  for (const DualityAudit& a : duality) unexpected += !a.ok();
  for (const WilfAudit& a : wilf) unexpected += !a.ok();
  for (const StatClaimAudit& a : stat_rows) unexpected += !a.as_expected();
  for (const EquiAudit& a : claims) unexpected += !a.as_expected();

  if (!opt.common.csv_path.empty()) {
    std::vector<std::string> rows;
    for (const FormulaAudit& a : cards)
      for (const FormulaAuditRow& r : a.rows)
        rows.push_back(a.id + "," + a.class_id + "," + a.variant + "," + std::to_string(r.n) +
                       "," + to_string(r.claimed) + "," + to_string(r.actual) + "," +
                       (r.in_range ? "1" : "0") + "," + (r.match() ? "1" : "0"));
    write_csv(opt.common.csv_path, "id,class,variant,n,claimed,actual,in_range,match", rows);
  }

  if (opt.common.as_json) {
    json j{{"command", "audit"}, {"n_max", opt.n_max}, {"unexpected", unexpected}};
    json arr = json::array();
    for (const FormulaAudit& a : cards) arr.push_back(formula_audit_json(a));
    j["cardinality"] = std::move(arr);
    arr = json::array();
    for (const DualityAudit& a : duality)
      arr.push_back(json{{"pattern", a.pattern.label},
                         {"complement", a.complement_pattern.label},
                         {"ok", a.ok()}});
    j["duality"] = std::move(arr);
    arr = json::array();
    for (const WilfAudit& a : wilf)
      arr.push_back(json{{"name", a.name}, {"left", a.left}, {"right", a.right}, {"ok", a.ok()}});
    j["wilf"] = std::move(arr);
    arr = json::array();
    for (const StatClaimAudit& a : stat_rows) {
      json row{{"system", a.system},   {"case", a.case_tag},
               {"stat", stat_name(a.kind)}, {"variant", a.variant},
               {"expected_good", a.expected_good}, {"checked", a.checked},
               {"mismatches", a.mismatches}, {"as_expected", a.as_expected()}};
      if (a.mismatches > 0) {
        row["witness"] = to_string(a.witness);
        row["witness_claimed"] = a.witness_claimed;
        row["witness_actual"] = a.witness_actual;
      }
      arr.push_back(std::move(row));
    }
    j["stat_claims"] = std::move(arr);
    arr = json::array();
    for (const EquiAudit& a : claims) arr.push_back(equi_audit_json(a, false));
    j["equi_claims"] = std::move(arr);
    emit_json(j);
    return;
  }

  std::cout << "[cardinality] n=1.." << opt.n_max << "\n";
  for (const FormulaAudit& a : cards) print_formula_audit_line(a);
  std::cout << "[duality] n=1.." << opt.n_max << "\n";
  for (const DualityAudit& a : duality)
    std::cout << a.pattern.label << " ~ " << a.complement_pattern.label
              << (a.ok() ? " ok" : " MISMATCH") << "\n";
  std::cout << "[wilf] n=1.." << opt.n_max << "\n";
  for (const WilfAudit& a : wilf) std::cout << a.name << (a.ok() ? " ok" : " MISMATCH") << "\n";
  std::cout << "[stat-claims] n=1.." << opt.n_max << "\n";
  if (opt.list) {
    for (const StatClaimAudit& a : stat_rows) {
      std::cout << a.system << ":" << a.case_tag << ":" << stat_name(a.kind) << ":" << a.variant
                << " expected=" << (a.expected_good ? "good" : "bad")
                << (a.ok() ? " ok" : " mismatches=" + std::to_string(a.mismatches))
                << (a.as_expected() ? " as-expected" : " UNEXPECTED") << "\n";
      if (!a.ok())
        std::cout << "  witness " << to_string(a.witness) << " claimed=" << a.witness_claimed
                  << " actual=" << a.witness_actual << "\n";
    }
  } else {
    int bad = 0;
    for (const StatClaimAudit& a : stat_rows)
      if (!a.as_expected()) {
        ++bad;
        std::cout << a.system << ":" << a.case_tag << ":" << stat_name(a.kind) << ":"
                  << a.variant << " UNEXPECTED\n";
      }
    std::cout << "rows=" << stat_rows.size() << " unexpected=" << bad << "\n";
  }
  std::cout << "[equi-claims] n=1.." << opt.n_max << "\n";
  for (const EquiAudit& a : claims) print_equi_audit_line(a);
  std::cout << "unexpected rows: " << unexpected << "\n";
}

// ---- bijection ----

struct BijectionOptions {
  Common common;
  std::string id;
  std::string word;
  bool invert = false;
  int n = 0;
  bool all = false;
};

json report_json(const BijectionReport& r) {
  json checks = json::array();
  for (const BijectionCheck& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"id", bijection_name(r.id)},
              {"n", r.n},
              {"domain_size", r.domain_size},
              {"all_pass", r.all_pass()},
              {"checks", std::move(checks)}};
}

json restricted_json(const RestrictedPairReport& r) {
  json checks = json::array();
  for (const BijectionCheck& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"map", r.map},
              {"domain", r.domain_label},
              {"codomain", r.codomain_label},
              {"n", r.n},
              {"domain_size", r.domain_size},
              {"all_pass", r.all_pass()},
              {"checks", std::move(checks)}};
}

void print_checks(const std::vector<BijectionCheck>& checks) {
  for (const BijectionCheck& c : checks) {
    std::cout << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
}

void run_bijection(const BijectionOptions& opt) {
  if (!opt.word.empty()) {
    if (opt.id.empty()) throw std::invalid_argument("--word needs --id to pick the map");
    BijectionId id = bijection_from_name(opt.id);
    Word w = parse_word(opt.word);
    Word image = opt.invert ? invert_bijection(id, w) : apply_bijection(id, w);
    if (opt.common.as_json) {
      emit_json(json{{"command", "bijection"},
                     {"id", opt.id},
                     {"direction", opt.invert ? "inverse" : "forward"},
                     {"word", to_string(w)},
                     {"image", to_string(image)}});
      return;
    }
    std::cout << to_string(image) << "\n";
    return;
  }
  if (opt.n == 0)
    throw std::invalid_argument("bijection needs --word to apply a map or --n to verify");
  check_budget(opt.n, "length");

  std::vector<BijectionId> ids;
  if (opt.all || opt.id.empty())
    ids = all_bijections();
  else
    ids.push_back(bijection_from_name(opt.id));

  std::vector<BijectionReport> reports;
  for (BijectionId id : ids) reports.push_back(verify_bijection(id, opt.n));
  std::vector<RestrictedPairReport> restricted;
  if (opt.all) restricted = restricted_pair_reports(opt.n);

  if (opt.common.as_json) {
    json arr = json::array();
    for (const BijectionReport& r : reports) arr.push_back(report_json(r));
    json j{{"command", "bijection"}, {"n", opt.n}, {"reports", std::move(arr)}};
    if (!restricted.empty()) {
      json rarr = json::array();
      for (const RestrictedPairReport& r : restricted) rarr.push_back(restricted_json(r));
      j["restricted"] = std::move(rarr);
    }
    emit_json(j);
    return;
  }
  for (const BijectionReport& r : reports) {
    std::cout << bijection_name(r.id) << " n=" << r.n << " domain=" << r.domain_size
              << (r.all_pass() ? " all-pass" : " FAILING") << "\n";
    print_checks(r.checks);
  }
  for (const RestrictedPairReport& r : restricted) {
    std::cout << r.map << " restricted " << r.domain_label << " -> " << r.codomain_label
              << " n=" << r.n << " domain=" << r.domain_size
              << (r.all_pass() ? " all-pass" : " FAILING") << "\n";
    print_checks(r.checks);
  }
}

// ---- equiscan ----

struct EquiscanOptions {
  Common common;
  int n_max = 7;
  std::string classes;
  std::vector<std::string> stats;
  bool all = false;
};

std::vector<ClassId> parse_class_list(const std::string& s) {
  std::vector<ClassId> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty class id in '" + s + "'");
    out.push_back(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

const char* scan_status(const EquiScanRow& r) {
  const EquiClaim* c = find_equi_claim(r.class_a, r.stat_a, r.class_b, r.stat_b);
  if (c == nullptr) return "novel";
  return c->documented ? "claimed" : "tracked";
}

void run_equiscan(const EquiscanOptions& opt) {
  check_budget(opt.n_max, "length bound");
  std::vector<ClassId> classes;
  if (opt.classes.empty())
    for (const ClassInfo& c : class_registry()) classes.push_back(c.id);
  else
    classes = parse_class_list(opt.classes);
  std::vector<StatKind> kinds;
  if (opt.stats.empty())
    kinds = all_stat_kinds();
  else
    for (const std::string& s : opt.stats) kinds.push_back(stat_from_name(s));

  std::vector<EquiScanRow> rows = equi_scan(classes, kinds, 1, opt.n_max, opt.common.threads);
  std::vector<EquiScanRow> shown;
  for (const EquiScanRow& r : rows)
    if (opt.all || r.coincides()) shown.push_back(r);

  if (!opt.common.csv_path.empty()) {
    std::vector<std::string> lines;
    for (const EquiScanRow& r : shown)
      lines.push_back(r.id() + "," + r.class_a + "," + stat_name(r.stat_a) + "," + r.class_b +
                      "," + stat_name(r.stat_b) + "," + std::to_string(r.first_mismatch_n) +
                      "," + scan_status(r));
    write_csv(opt.common.csv_path,
              "id,class_a,stat_a,class_b,stat_b,first_mismatch_n,status", lines);
  }
  if (opt.common.as_json) {
    json arr = json::array();
    for (const EquiScanRow& r : shown)
      arr.push_back(json{{"id", r.id()},
                         {"class_a", r.class_a},
                         {"stat_a", stat_name(r.stat_a)},
                         {"class_b", r.class_b},
                         {"stat_b", stat_name(r.stat_b)},
                         {"first_mismatch_n", r.first_mismatch_n},
                         {"coincides", r.coincides()},
                         {"status", scan_status(r)}});
    emit_json(json{{"command", "equiscan"},
                   {"n_max", opt.n_max},
                   {"candidates", rows.size()},
                   {"rows", std::move(arr)}});
    return;
  }
  for (const EquiScanRow& r : shown) {
    if (r.coincides())
      std::cout << r.id() << " coincides (" << scan_status(r) << ")\n";
    else
      std::cout << r.id() << " fails first=" << r.first_mismatch_n << "\n";
  }
  std::size_t kept = 0;
  for (const EquiScanRow& r : rows) kept += r.coincides();
  std::cout << "candidates=" << rows.size() << " coincide=" << kept << " (n=1.." << opt.n_max
            << ")\n";
}

// ---- conjecture ----

struct ConjectureOptions {
  Common common;
  int n_max = 8;
  std::string sizes;
  bool list = false;
};

void run_conjecture(const ConjectureOptions& opt) {
  check_budget(opt.n_max, "length bound");
  std::vector<std::pair<int, int>> sweeps;
  if (opt.sizes.empty()) {
    sweeps = {{3, 4}, {4, 4}};
  } else {
    std::size_t comma = opt.sizes.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--sizes expects \"k,l\", got '" + opt.sizes + "'");
    int k = std::stoi(opt.sizes.substr(0, comma));
    int l = std::stoi(opt.sizes.substr(comma + 1));
    if (k < 1 || k > l || l > 4)
      throw std::invalid_argument("--sizes expects 1 <= k <= l <= 4");
    sweeps = {{k, l}};
  }

  std::vector<ConjectureReport> reports;
  for (auto [k, l] : sweeps) reports.push_back(check_conjecture(k, l, opt.n_max, opt.common.threads));

  if (!opt.common.csv_path.empty()) {
    std::vector<std::string> lines;
    for (const ConjectureReport& rep : reports)
      for (const ConjectureCase& c : rep.cases)
        lines.push_back(std::to_string(rep.size1) + "," + std::to_string(rep.size2) + "," +
                        c.p1.label + "," + c.p2.label + "," + std::to_string(c.part) + "," +
                        (c.degenerate ? "1" : "0") + "," + (c.holds ? "1" : "0") + "," +
                        std::to_string(c.first_mismatch_n));
    write_csv(opt.common.csv_path,
              "size1,size2,p1,p2,part,degenerate,holds,first_mismatch_n", lines);
  }
  if (opt.common.as_json) {
    json arr = json::array();
    for (const ConjectureReport& rep : reports) {
      json cases = json::array();
      for (const ConjectureCase& c : rep.cases)
        cases.push_back(json{{"p1", c.p1.label},
                             {"p2", c.p2.label},
                             {"part", c.part},
                             {"degenerate", c.degenerate},
                             {"holds", c.holds},
                             {"first_mismatch_n", c.first_mismatch_n}});
      arr.push_back(json{{"size1", rep.size1},
                         {"size2", rep.size2},
                         {"n_max", rep.n_max},
                         {"part1_total", rep.total(1)},
                         {"part1_holding", rep.holding(1)},
                         {"part2_total", rep.total(2)},
                         {"part2_holding", rep.holding(2)},
                         {"degenerate_total", rep.degenerate_total()},
                         {"degenerate_holding", rep.degenerate_holding()},
                         {"all_hold", rep.all_hold()},
                         {"cases", std::move(cases)}});
    }
    emit_json(json{{"command", "conjecture"}, {"sweeps", std::move(arr)}});
    return;
  }
  for (const ConjectureReport& rep : reports) {
    std::cout << "sweep (" << rep.size1 << "," << rep.size2 << ") n<=" << rep.n_max
              << ": part(i) " << rep.holding(1) << "/" << rep.total(1) << " hold, part(ii) "
              << rep.holding(2) << "/" << rep.total(2) << " hold, degenerate "
              << rep.degenerate_holding() << "/" << rep.degenerate_total() << " collapse, all="
              << (rep.all_hold() ? "yes" : "no") << "\n";
    for (const ConjectureCase& c : rep.cases) {
      if (opt.list) {
        std::cout << "  (" << c.p1.label << ", " << c.p2.label << ") "
                  << (c.degenerate ? "degenerate" : c.part == 1 ? "part(i)" : "part(ii)")
                  << (c.holds ? " holds" : " fails first=" + std::to_string(c.first_mismatch_n))
                  << "\n";
      } else if (!c.holds) {
        std::cout << "  counterexample "
                  << (c.degenerate ? "degenerate" : c.part == 1 ? "part(i)" : "part(ii)") << " ("
                  << c.p1.label << ", " << c.p2.label << ") first=" << c.first_mismatch_n
                  << "\n";
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern avoidance workbench for set partitions in RGF form"};
  app.require_subcommand(1);

  ListingOptions enum_opt;
  CLI::App* cmd = app.add_subcommand("enumerate", "count or list all RGFs of one length");
  cmd->add_option("--n", enum_opt.n, "word length")->required()->check(CLI::PositiveNumber);
  cmd->add_flag("--count", enum_opt.count_only, "print the count (default)");
  cmd->add_flag("--list", enum_opt.list, "print the words, one per line");
  add_common(cmd, enum_opt.common);

  ListingOptions avoid_opt;
  cmd = app.add_subcommand("avoid", "count or list the avoiders of a pattern set");
  cmd->add_option("--n", avoid_opt.n, "word length")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--patterns", avoid_opt.patterns, "comma separated patterns, e.g. \"12/3,1/24/3\"")
      ->required();
  cmd->add_flag("--count", avoid_opt.count_only, "print the count (default)");
  cmd->add_flag("--list", avoid_opt.list, "print the words, one per line");
  add_common(cmd, avoid_opt.common);

  StatsOptions stats_opt;
  cmd = app.add_subcommand("stats", "subword statistics of a single word");
  cmd->add_option("--word", stats_opt.word, "RGF word, e.g. 123243125")->required();
  cmd->add_option("--stat", stats_opt.stat, "one of lb, ls, rb, rs");
  cmd->add_flag("--all", stats_opt.all, "all four statistics (default)");
  add_common(cmd, stats_opt.common);

  DistOptions dist_opt;
  cmd = app.add_subcommand("dist", "statistic distribution over an avoidance class");
  cmd->add_option("--n", dist_opt.n, "word length")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--patterns", dist_opt.patterns, "comma separated patterns; empty means all words");
  cmd->add_option("--stat", dist_opt.stat, "one of lb, ls, rb, rs");
  cmd->add_flag("--all", dist_opt.all, "all four statistics (default)");
  add_common(cmd, dist_opt.common);

  AuditOptions audit_opt;
  cmd = app.add_subcommand("audit",
                           "replay formulas, dualities, Wilf pairs, statistic rows, and "
                           "equidistribution claims against enumeration");
  cmd->add_option("--n-max", audit_opt.n_max, "largest length to audit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--id", audit_opt.id,
                  "audit one formula id, claim id, or class id (class ids print count sequences)");
  cmd->add_flag("--list", audit_opt.list, "print every row, not just summaries");
  add_common(cmd, audit_opt.common);

  BijectionOptions bij_opt;
  cmd = app.add_subcommand("bijection", "apply a bijection to a word or verify it at a length");
  cmd->add_option("--id", bij_opt.id, "F_COMPL, H_SWAP, G_SWAP, PHI_FLIP, or PHI_PAIR");
  cmd->add_option("--word", bij_opt.word, "word to map");
  cmd->add_flag("--invert", bij_opt.invert, "apply the inverse map");
  cmd->add_option("--n", bij_opt.n, "verify on the full classes of this length")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--all", bij_opt.all, "verify every map, plus the restricted-pair reports");
  add_common(cmd, bij_opt.common, false);

  EquiscanOptions scan_opt;
  cmd = app.add_subcommand("equiscan", "discovery scan for coinciding statistic distributions");
  cmd->add_option("--n-max", scan_opt.n_max, "largest length to compare")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--classes", scan_opt.classes,
                  "comma separated class ids (default: every characterized class)");
  cmd->add_option("--stat", scan_opt.stats, "restrict to these statistics (repeatable)");
  cmd->add_flag("--all", scan_opt.all, "also print candidates that failed, with the failing n");
  add_common(cmd, scan_opt.common);

  ConjectureOptions conj_opt;
  cmd = app.add_subcommand("conjecture",
                           "sweep ordered pattern pairs for the complement conjecture");
  cmd->add_option("--n-max", conj_opt.n_max, "largest length to compare")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--sizes", conj_opt.sizes, "pattern sizes as \"k,l\" (default: 3,4 then 4,4)");
  cmd->add_flag("--list", conj_opt.list, "print the full verdict table");
  add_common(cmd, conj_opt.common);

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("enumerate")) run_listing("enumerate", enum_opt);
    else if (app.got_subcommand("avoid")) run_listing("avoid", avoid_opt);
    else if (app.got_subcommand("stats")) run_stats(stats_opt);
    else if (app.got_subcommand("dist")) run_dist(dist_opt);
    else if (app.got_subcommand("audit")) run_audit(audit_opt);
    else if (app.got_subcommand("bijection")) run_bijection(bij_opt);
    else if (app.got_subcommand("equiscan")) run_equiscan(scan_opt);
    else if (app.got_subcommand("conjecture")) run_conjecture(conj_opt);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "infrastructure error: " << e.what() << "\n";
    return 1;
  }
}
