#pragma once

// Claim registry across all modules, suite configuration parsing, parallel
// grid execution and report emission.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fleckq/bernoulli.hpp"
#include "fleckq/cyclotomic.hpp"
#include "fleckq/fleck.hpp"
#include "fleckq/padic.hpp"
#include "fleckq/stirling.hpp"
#include "fleckq/verdict.hpp"

namespace fleckq {

/// Values for one grid key given the parameters already fixed (p first,
/// then earlier keys). An empty result prunes the branch.
using RangeFn = std::function<std::vector<long>(const Params&)>;

struct ClaimSpec {
  std::string id;
  std::string module;
  bool uses_prime = true;
  bool uses_precision = false;  // accepts M / guard
  std::vector<std::pair<std::string, RangeFn>> keys;
  ClaimFn fn;
};

inline std::vector<long> span(long lo, long hi, long step = 1) {
  std::vector<long> v;
  for (long x = lo; x <= hi; x += step) v.push_back(x);
  return v;
}

namespace detail {

inline RangeFn fixed(long lo, long hi, long step = 1) {
  return [=](const Params&) { return span(lo, hi, step); };
}
inline RangeFn residues(long lo_offset = 0) {
  return [=](const Params& q) { return span(lo_offset, q.get("p") - 1); };
}
inline RangeFn units() { return residues(1); }

inline long pw(long p, long e) { return prime_power(p, e).get_si(); }

inline std::vector<ClaimSpec> build_registry() {
  std::vector<ClaimSpec> r;
  auto add = [&](std::string id, std::string module, std::vector<std::pair<std::string, RangeFn>> keys, ClaimFn fn,
                 bool uses_prime = true, bool uses_precision = false) {
    r.push_back({std::move(id), std::move(module), uses_prime, uses_precision, std::move(keys), std::move(fn)});
  };
  auto fq = [](const char* id) { return fleck_claims().at(id); };
  auto cy = [](const char* id) { return cyclo_claims().at(id); };
  auto st = [](const char* id) { return stirling_claims().at(id); };

  add("lem2.2", "bernoulli", {{"m", fixed(0, 5)}, {"k", fixed(1, 10)}},
      [](const Params& q) { return verify_lemma_2_2(q.get("m"), q.get("k"), q.get_or("partition_cap", kDefaultPartitionCap)); },
      false);
  add("miki", "bernoulli", {{"n", fixed(2, 20)}, {"t_num", fixed(-1, 2)}, {"t_den", fixed(2, 2)}},
      [](const Params& q) {
        if (q.get("t_den") == 0) throw hypothesis_error("t_den must be nonzero");
        Verdict v = verify_miki_poly(q.get("n"), make_rat(q.get("t_num"), q.get("t_den")));
        v.params = q;
        return v;
      },
      false);

  add("lem4.1", "padic", {{"b", fixed(1, 3)}}, [](const Params& q) {
    if (q.get("p") < 3) throw hypothesis_error("needs odd p");
    return verify_lemma_4_1(q.get("p"), q.get("b"));
  });
  add("carlitz", "padic", {{"b", fixed(1, 3)}}, [](const Params& q) {
    if (q.get("p") < 3) throw hypothesis_error("needs odd p");
    return verify_carlitz(q.get("p"), q.get("b"));
  });

  add("thm2.1-i", "cyclotomic", {}, cy("thm2.1-i"), true, true);
  add("thm2.1-ii-a", "cyclotomic",
      {{"a", units()},
       {"n", fixed(0, 12)},
       {"m", [](const Params& q) { return span(least_residue(-q.get("n"), q.get("p")), 2 * q.get("p"), q.get("p")); }}},
      cy("thm2.1-ii-a"), true, true);
  add("thm2.1-ii-b", "cyclotomic", {{"b", fixed(1, 2)}, {"n", fixed(0, 4)}, {"a", units()}}, cy("thm2.1-ii-b"), true,
      true);
  add("lem2.1", "cyclotomic", {{"a", [](const Params& q) { return span(0, q.get("p") * q.get("p") - 1); }}},
      cy("lem2.1"), true, true);
  add("lem3.1", "cyclotomic", {{"n", fixed(0, 12)}, {"r", residues()}}, cy("lem3.1"), true, true);
  add("lem3.2", "cyclotomic", {{"n", fixed(0, 20)}, {"r", units()}}, cy("lem3.2"), true, true);
  add("gross-koblitz", "cyclotomic", {{"s", [](const Params& q) { return span(0, q.get("p") - 2); }}},
      cy("gross-koblitz"), true, true);
  add("lem4.2", "cyclotomic",
      {{"n", fixed(1, 18)},
       {"r", units()},
       {"b", [](const Params& q) {
          const Order o = ord_p(q.get("p"), q.get("p") * q.get("n"));
          return span(1, o.value());
        }}},
      cy("lem4.2"), true, true);

  add("fleck-int", "fleck", {{"n", fixed(0, 200)}, {"r", residues()}}, fq("fleck-int"));
  add("wan-int", "fleck",
      {{"a", fixed(1, 3)},
       {"l", fixed(0, 3)},
       {"n", fixed(0, 150)},
       {"r", [](const Params& q) { return span(0, pw(q.get("p"), q.get("a")) - 1); }}},
      fq("wan-int"));
  add("eq1.1", "fleck", {{"r", units()}}, fq("eq1.1"));
  add("eq1.4", "fleck", {{"n", fixed(1, 120)}, {"r", residues()}}, fq("eq1.4"));
  add("thm1.1", "fleck", {{"n", fixed(0, 40)}, {"k", fixed(1, 3)}, {"r", residues()}}, fq("thm1.1"));
  add("cor1.1", "fleck", {{"n", fixed(1, 40)}}, fq("cor1.1"));
  add("cor1.2", "fleck", {{"n", fixed(0, 60)}, {"r", residues()}, {"b", fixed(2, 3)}}, fq("cor1.2"));
  add("cor1.3", "fleck", {{"n", fixed(0, 11)}, {"k", fixed(1, 2)}, {"r", residues()}}, fq("cor1.3"));
  add("lem1.1", "fleck", {{"n", fixed(1, 120)}}, fq("lem1.1"));
  add("thm1.2", "fleck", {{"n", fixed(2, 20)}}, fq("thm1.2"));
  add("eq1.5", "fleck", {{"n", [](const Params& q) { return span(2, q.get("p")); }}}, fq("eq1.5"));
  add("eq1.6", "fleck", {{"n", [](const Params& q) { return span(2, q.get("p") - 2); }}}, fq("eq1.6"));
  add("cor1.4-1.15", "fleck", {}, fq("cor1.4-1.15"));
  add("cor1.4-1.16", "fleck", {}, fq("cor1.4-1.16"));
  add("cor1.5", "fleck", {{"n", fixed(1, 18)}, {"r", units()}}, fq("cor1.5"));
  add("cor1.6", "fleck", {{"n", fixed(1, 18)}, {"r", units()}}, fq("cor1.6"));
  add("thm1.3", "fleck",
      {{"n", fixed(1, 18)},
       {"r", units()},
       {"b", [](const Params& q) {
          const Order o = ord_p(q.get("p"), q.get("p") * q.get("n"));
          return span(1, o.value());
        }}},
      fq("thm1.3"));
  add("rem1.4", "fleck",
      {{"n", fixed(0, 12)},
       {"r", [](const Params& q) { return span(-3, q.get("p") - 1); }},
       {"s", [](const Params& q) { return span(0, star_pair(q.get("p"), q.get("n")).n_costar); }}},
      fq("rem1.4"));
  add("rem1.1-kummer", "fleck", {{"n", fixed(1, 30)}, {"k", fixed(1, 2)}}, fq("rem1.1-kummer"));
  add("rem1.1i", "fleck", {{"n", fixed(1, 21, 2)}}, fq("rem1.1i"));
  add("thm1.4", "fleck",
      {{"a", fixed(1, 2)},
       {"l", fixed(0, 2)},
       {"m", residues()},
       {"n", [](const Params& q) { return span(q.get("l") + q.get("m") + 2, q.get("l") + q.get("m") + q.get("p")); }},
       {"d", [](const Params& q) { return span(1, std::max(pw(q.get("p"), q.get("a")) / (q.get("p") * q.get("p")), 1L)); }}},
      fq("thm1.4"));
  const std::vector<std::pair<std::string, RangeFn>> lift_keys = {
      {"a", fixed(1, 2)},
      {"l", fixed(0, 2)},
      {"n", fixed(0, 12)},
      {"r", residues()},
      {"s", [](const Params& q) { return span(0, pw(q.get("p"), q.get("a") - 1) - 1); }},
      {"t", [](const Params& q) { return span(0, pw(q.get("p"), q.get("a") - 1) - 1); }}};
  add("thm5.1", "fleck", lift_keys, fq("thm5.1"));
  add("lem5.4", "fleck", lift_keys, fq("lem5.4"));
  add("lem5.1", "fleck", {{"m", fixed(2, 3)}, {"n", fixed(1, 10)}, {"r", fixed(-2, 2)}, {"l", fixed(0, 3)}},
      fq("lem5.1"), false);
  const std::vector<std::pair<std::string, RangeFn>> low_keys = {
      {"l", fixed(0, 3)},
      {"n", [](const Params& q) { return span(q.get("p") + 1, 29); }},
      {"r", [](const Params& q) { return span(-2, q.get("p") - 1); }}};
  add("lem5.2", "fleck", low_keys, fq("lem5.2"));
  add("lem5.3", "fleck", low_keys, fq("lem5.3"));

  add("gl", "stirling", {{"n", fixed(1, 6)}, {"m", fixed(1, 3)}, {"b", fixed(1, 2)}}, st("gl"));
  const std::vector<std::pair<std::string, RangeFn>> s114 = {
      {"n", fixed(2, 2)},
      {"m", fixed(1, 1)},
      {"b", [](const Params& q) {
         const long p = q.get("p");
         return span(2 * floor_div(p * q.get("n") - 1, p - 1) + 1, 2 * floor_div(p * q.get("n") - 1, p - 1) + 1);
       }}};
  add("eq1.14", "stirling", s114, st("eq1.14"));
  add("rem1.1ii", "stirling", s114, st("rem1.1ii"));
  return r;
}

}  // namespace detail

inline const std::vector<ClaimSpec>& claim_registry() {
  static const std::vector<ClaimSpec> registry = detail::build_registry();
  return registry;
}

inline const ClaimSpec* find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

/// Any registered claim at a single point. Unknown ids throw
/// std::invalid_argument.
inline Verdict verify_claim(const std::string& id, const Params& params) {
  const ClaimSpec* c = find_claim(id);
  if (!c) throw std::invalid_argument("unknown claim '" + id + "'");
  return c->fn(params);
}

class config_error : public std::runtime_error {
 public:
  config_error(const std::string& what, long line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

struct SuiteSpec {
  std::string name;
  std::vector<std::string> claims;
  std::vector<long> primes{3, 5, 7};
  std::map<std::string, std::vector<long>> ranges;  // overrides per grid key
  std::optional<long> n_max;
  std::optional<long> precision;  // M
  long guard = 2;
  long jobs = 0;  // 0: available workers
  std::string report;
  std::string format = "jsonl";
};

inline long default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<long>(hw);
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline long parse_long(const std::string& s, long line) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("expected an integer, got '" + s + "'", line);
  }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// "1,3,5", "2..20", "2..20/2" and mixtures.
inline std::vector<long> parse_values(const std::string& s, long line) {
  std::vector<long> out;
  for (const auto& item : split(s, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_long(item, line));
      continue;
    }
    std::string hi = item.substr(dots + 2);
    long step = 1;
    if (const auto slash = hi.find('/'); slash != std::string::npos) {
      step = parse_long(trim(hi.substr(slash + 1)), line);
      hi = hi.substr(0, slash);
      if (step < 1) throw config_error("range step must be positive", line);
    }
    const long lo = parse_long(trim(item.substr(0, dots)), line);
    const long top = parse_long(trim(hi), line);
    if (top < lo) throw config_error("empty range '" + item + "'", line);
    for (long v = lo; v <= top; v += step) out.push_back(v);
  }
  if (out.empty()) throw config_error("empty value list", line);
  return out;
}

inline const std::vector<std::string>& grid_keys() {
  static const std::vector<std::string> keys = {"n", "r", "m", "a", "l", "b", "d", "k", "s", "t", "t_num", "t_den"};
  return keys;
}

inline void validate(const SuiteSpec& spec, long line) {
  if (spec.claims.empty()) throw config_error("suite '" + spec.name + "' names no claims", line);
  for (const auto& id : spec.claims)
    if (!find_claim(id)) throw config_error("suite '" + spec.name + "': unknown claim '" + id + "'", line);
  for (long p : spec.primes)
    if (!is_prime(p)) throw config_error("suite '" + spec.name + "': " + std::to_string(p) + " is not prime", line);
  if (spec.format != "jsonl" && spec.format != "table")
    throw config_error("format must be jsonl or table, got '" + spec.format + "'", line);
  if (spec.jobs < 0) throw config_error("jobs must be nonnegative", line);
  if (spec.guard < 0) throw config_error("guard must be nonnegative", line);
}

}  // namespace detail

/// Parses the INI-style suite document described in docs/config.md.
/// Top-level keys set defaults for every suite that follows.
inline std::vector<SuiteSpec> parse_config(const std::string& text) {
  std::vector<SuiteSpec> suites;
  std::vector<long> suite_lines;
  SuiteSpec defaults;
  SuiteSpec* current = nullptr;
  std::istringstream in(text);
  std::string raw;
  long line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    if (const auto hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw config_error("unterminated section header", line);
      const auto words = detail::split(s.substr(1, s.size() - 2), ' ');
      if (words.size() != 2 || words[0] != "suite") throw config_error("section header must be [suite NAME]", line);
      for (const auto& other : suites)
        if (other.name == words[1]) throw config_error("duplicate suite '" + words[1] + "'", line);
      suites.push_back(defaults);
      suite_lines.push_back(line);
      current = &suites.back();
      current->name = words[1];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw config_error("expected key = value", line);
    const std::string key = detail::trim(s.substr(0, eq));
    const std::string value = detail::trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) throw config_error("expected key = value", line);
    SuiteSpec& target = current ? *current : defaults;
    if (key == "claims") {
      if (!current) throw config_error("'claims' belongs inside a suite section", line);
      target.claims = detail::split(value, ',');
    } else if (key == "primes") {
      target.primes = detail::parse_values(value, line);
    } else if (key == "n_max") {
      target.n_max = detail::parse_long(value, line);
    } else if (key == "M") {
      target.precision = detail::parse_long(value, line);
    } else if (key == "guard") {
      target.guard = detail::parse_long(value, line);
    } else if (key == "jobs") {
      target.jobs = detail::parse_long(value, line);
    } else if (key == "report") {
      target.report = value;
    } else if (key == "format") {
      target.format = value;
    } else if (std::find(detail::grid_keys().begin(), detail::grid_keys().end(), key) != detail::grid_keys().end()) {
      target.ranges[key] = detail::parse_values(value, line);
    } else {
      throw config_error("unknown key '" + key + "'", line);
    }
  }
  for (std::size_t i = 0; i < suites.size(); ++i) {
    if (suites[i].claims.empty()) suites[i].claims = {suites[i].name};
    detail::validate(suites[i], suite_lines[i]);
  }
  return suites;
}

/// A suite for one claim id (or "all"), as the command line builds it.
inline SuiteSpec make_suite(const std::string& id) {
  SuiteSpec spec;
  spec.name = id;
  if (id == "all") {
    for (const auto& c : claim_registry()) spec.claims.push_back(c.id);
  } else {
    spec.claims = {id};
  }
  detail::validate(spec, 0);
  return spec;
}

struct ReportEntry {
  std::string suite;
  Verdict verdict;
  double elapsed_ms = 0;
};

struct RunReport {
  std::string suite;
  std::vector<ReportEntry> entries;
  double wall_seconds = 0;

  long count(Status s) const {
    return static_cast<long>(std::count_if(entries.begin(), entries.end(),
                                           [s](const ReportEntry& e) { return e.verdict.status == s; }));
  }
  bool ok() const { return count(Status::Fail) == 0 && count(Status::Errored) == 0; }
};

/// Grid points of a claim under a suite's overrides, in generation order.
inline std::vector<Params> grid_points(const ClaimSpec& claim, const SuiteSpec& spec) {
  std::vector<Params> out;
  std::vector<Params> seeds;
  if (claim.uses_prime) {
    for (long p : spec.primes) seeds.push_back(Params{{"p", p}});
  } else {
    seeds.emplace_back();
  }
  for (const Params& seed : seeds) {
    std::function<void(Params, std::size_t)> expand = [&](Params q, std::size_t i) {
      if (i == claim.keys.size()) {
        if (claim.uses_precision) {
          if (spec.precision) q.set("M", *spec.precision);
          if (spec.guard != 2) q.set("guard", spec.guard);
        }
        out.push_back(std::move(q));
        return;
      }
      const auto& [key, range] = claim.keys[i];
      std::vector<long> values;
      if (const auto it = spec.ranges.find(key); it != spec.ranges.end()) {
        values = it->second;
      } else {
        values = range(q);
        if (key == "n" && spec.n_max) {
          const long lo = values.empty() ? 0 : values.front();
          values = span(lo, *spec.n_max);
        }
      }
      for (long v : values) {
        Params next = q;
        next.set(key, v);
        expand(std::move(next), i + 1);
      }
    };
    expand(seed, 0);
  }
  return out;
}

/// Runs one point, folding exceptions into the verdict status.
inline Verdict run_point(const ClaimSpec& claim, const Params& params) {
  auto failed = [&](Status s, const std::string& what) {
    Verdict v;
    v.claim_id = claim.id;
    v.params = params;
    v.status = s;
    v.detail = what;
    return v;
  };
  try {
    Verdict v = claim.fn(params);
    v.params = params;
    return v;
  } catch (const hypothesis_error& e) {
    return failed(Status::Skipped, std::string("hypothesis: ") + e.what());
  } catch (const resource_error& e) {
    return failed(Status::Errored, std::string("resource: ") + e.what());
  } catch (const precision_error& e) {
    return failed(Status::Errored, std::string("precision: ") + e.what());
  } catch (const std::exception& e) {
    return failed(Status::Errored, e.what());
  }
}

/// Evaluates every grid point of every claim in the suite. Points are
/// handed to workers by index and results stored by index, so the report
/// order does not depend on the number of jobs.
inline RunReport run_suite(const SuiteSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<const ClaimSpec*, Params>> tasks;
  for (const auto& id : spec.claims) {
    const ClaimSpec* c = find_claim(id);
    if (!c) throw config_error("unknown claim '" + id + "'");
    for (auto& q : grid_points(*c, spec)) tasks.emplace_back(c, std::move(q));
  }
  RunReport report;
  report.suite = spec.name;
  report.entries.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      Verdict v = run_point(*tasks[i].first, tasks[i].second);
      const auto t1 = std::chrono::steady_clock::now();
      report.entries[i] = {spec.name, std::move(v), std::chrono::duration<double, std::milli>(t1 - t0).count()};
    }
  };
  const long jobs = std::max(1L, std::min<long>(spec.jobs > 0 ? spec.jobs : default_jobs(), static_cast<long>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (long j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline nlohmann::ordered_json to_json(const ReportEntry& e, bool with_timing = true) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : e.verdict.params.items()) params[k] = v;
  const Modulus& m = e.verdict.modulus;
  nlohmann::ordered_json j;
  j["suite"] = e.suite;
  j["claim"] = e.verdict.claim_id;
  j["params"] = params;
  j["modulus"] = {{"prime", m.prime}, {"p_exponent", m.p_exponent}, {"pi_exponent", m.pi_exponent}, {"exact", m.exact}};
  j["lhs"] = e.verdict.lhs;
  j["rhs"] = e.verdict.rhs;
  j["pass"] = e.verdict.pass();
  j["status"] = status_name(e.verdict.status);
  j["detail"] = e.verdict.detail;
  if (with_timing) j["elapsed_ms"] = std::round(e.elapsed_ms * 1000) / 1000;
  return j;
}

inline std::string params_string(const Params& q) {
  std::string s;
  for (const auto& [k, v] : q.items()) {
    if (!s.empty()) s += ' ';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

inline std::string summary_line(const RunReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << ": " << r.entries.size() << " checks, " << r.count(Status::Pass) << " pass, "
      << r.count(Status::Fail) << " fail, " << r.count(Status::Skipped) << " skipped, " << r.count(Status::Errored)
      << " errored";
  char buf[32];
  std::snprintf(buf, sizeof buf, ", %.2fs", r.wall_seconds);
  out << buf;
  return out.str();
}

/// jsonl: one object per verdict, nothing else. table: aligned columns with
/// failing rows flagged and a summary line.
inline void emit_report(const RunReport& report, const std::string& format, std::ostream& out) {
  if (format == "jsonl") {
    for (const auto& e : report.entries) out << to_json(e).dump() << '\n';
    return;
  }
  if (format != "table") throw std::invalid_argument("unknown report format '" + format + "'");
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"", "claim", "params", "modulus", "lhs", "rhs"});
  for (const auto& e : report.entries) {
    const Verdict& v = e.verdict;
    const char* flag = v.status == Status::Pass      ? "ok"
                       : v.status == Status::Skipped ? "skip"
                       : v.status == Status::Fail    ? "FAIL"
                                                     : "ERROR";
    rows.push_back({flag, v.claim_id, params_string(v.params), v.modulus.describe(), v.lhs, v.rhs});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], std::min<std::size_t>(r[i].size(), 40));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string cell = r[i].size() > 40 ? r[i].substr(0, 37) + "..." : r[i];
      cell.resize(std::max(width[i], cell.size()), ' ');
      line += cell;
      if (i + 1 < r.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line;
    if (k > 0 && report.entries[k - 1].verdict.status != Status::Pass && !report.entries[k - 1].verdict.detail.empty())
      out << "  # " << report.entries[k - 1].verdict.detail;
    out << '\n';
  }
  out << summary_line(report) << '\n';
}

}  // namespace fleckq
