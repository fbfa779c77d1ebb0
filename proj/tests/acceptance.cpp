// Acceptance run: one line per criterion, nonzero exit if any is red.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fleckq/suite.hpp"

using namespace fleckq;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string note;
  long points = 0;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }

  // Runs a suite and requires zero fail/errored and at least one pass.
  void suite(const std::string& claim, std::vector<long> primes, std::map<std::string, std::vector<long>> ranges = {},
             std::optional<long> precision = std::nullopt) {
    SuiteSpec s;
    s.name = claim;
    s.claims = {claim};
    s.primes = std::move(primes);
    s.ranges = std::move(ranges);
    s.precision = precision;
    const RunReport r = run_suite(s);
    points += static_cast<long>(r.entries.size());
    for (const auto& e : r.entries)
      if (e.verdict.status == Status::Fail || e.verdict.status == Status::Errored) {
        require(false, claim + " " + params_string(e.verdict.params) + " " + status_name(e.verdict.status) + ": " +
                           e.verdict.lhs + " vs " + e.verdict.rhs + " " + e.verdict.detail);
        return;
      }
    require(r.count(Status::Pass) > 0, claim + ": no passing points");
  }

  void verdict(const Verdict& v, const std::string& lhs = {}, const std::string& rhs = {}) {
    ++points;
    require(v.pass(), v.claim_id + " " + params_string(v.params) + " " + status_name(v.status) + ": " + v.lhs + " vs " +
                          v.rhs + " " + v.detail);
    if (!lhs.empty()) require(v.lhs == lhs, v.claim_id + " lhs " + v.lhs + " != " + lhs);
    if (!rhs.empty()) require(v.rhs == rhs, v.claim_id + " rhs " + v.rhs + " != " + rhs);
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) c.require(false, "took " + std::to_string(secs) + "s");
  if (!c.ok) ++failures;
  std::printf("%s %2d %s (%ld checks, %.2fs%s)\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), c.points, secs,
              c.note.empty() ? "" : (": " + c.note).c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const auto start = Clock::now();

  criterion(1, "Fleck integrality sweep", 30, [](Check& c) { c.suite("fleck-int", {2, 3, 5, 7, 11}); });

  criterion(2, "Wan integrality sweep", 60, [](Check& c) {
    c.suite("wan-int", {2, 3}, {{"a", {2, 3}}});
    c.suite("wan-int", {5}, {{"a", {2}}});
  });

  criterion(3, "F_p(n,r) against higher-order Bernoulli mod p", 0,
            [](Check& c) { c.suite("eq1.4", {3, 5, 7, 11, 13}); });

  criterion(4, "difference quotient congruence", 0, [](Check& c) {
    c.suite("thm1.1", {3, 5, 7});
    c.verdict(verify_claim("thm1.1", {{"p", 5}, {"n", 2}, {"k", 1}, {"r", 0}}), "4", "4");
    c.require(diff_quotient(5, 2, 22, 0) == make_rat(-29, 4), "diff_quotient(5,2,22,0) != -29/4");
  });

  criterion(5, "F_p(pn,0)/(pn) mod p", 0, [](Check& c) {
    c.suite("thm1.2", {5, 7, 11, 13}, {{"n", span(2, 20, 2)}});
    c.verdict(verify_claim("thm1.2", {{"p", 5}, {"n", 2}}), "4", "4");
    c.require(fleck_quotient(5, 10, 0) == -10, "F_5(10,0) != -10");
  });

  criterion(6, "central binomial congruences", 10, [](Check& c) {
    std::vector<long> primes;
    for (long p = 5; p <= 97; ++p)
      if (is_prime(p)) primes.push_back(p);
    c.suite("cor1.4-1.15", primes);
    c.suite("cor1.4-1.16", {7, 11, 13});
    c.verdict(verify_claim("cor1.4-1.15", {{"p", 5}}), "125", "125");
    c.require(binomial(9, 4) - 1 + 9 * 125 == 1250, "anchor arithmetic");
  });

  criterion(7, "r^n F_p(pn,r) mod p^{b+1}", 0, [](Check& c) {
    c.suite("thm1.3", {3, 5, 7});
    c.verdict(verify_claim("thm1.3", {{"p", 5}, {"n", 2}, {"r", 1}, {"b", 1}}), "5", "5");
  });

  criterion(8, "digit-block sums and lifted extended quotients", 0, [](Check& c) {
    c.suite("thm1.4", {3, 5, 7});
    c.suite("thm5.1", {3, 5, 7});
    c.suite("lem5.4", {3, 5, 7});
    c.verdict(verify_claim("thm1.4", {{"p", 5}, {"a", 1}, {"l", 0}, {"m", 0}, {"n", 2}, {"d", 1}}), "0", "0");
  });

  criterion(9, "cyclotomic congruences", 120, [](Check& c) {
    c.suite("thm2.1-i", {3, 5, 7, 11});
    c.suite("thm2.1-ii-a", {3, 5, 7});
    c.suite("thm2.1-ii-b", {3, 5});
    c.suite("lem2.1", {3, 5, 7});
    c.suite("lem3.1", {3, 5, 7});
    c.suite("lem3.2", {3, 5, 7});
    const CycloElem pi = pi_element(3, 2);
    c.require(pi * pi == CycloElem::constant(3, 2, ExactInt(6)), "pi^2 != 6 mod 9 at p=3");
  });

  criterion(10, "Gauss sums by Gamma_p", 0, [](Check& c) {
    c.suite("gross-koblitz", {3, 5, 7}, {{"s", {1, 2, 3, 4, 5}}}, 6);
    const CycloElem g = gauss_sum(3, 1, 6);
    c.require(g * g == CycloElem::constant(3, 6, ExactInt(-3)), "G(1)^2 != -3 at p=3");
  });

  criterion(11, "Wilson quotient and Carlitz", 0, [](Check& c) {
    c.suite("lem4.1", {3, 5, 7, 11});
    c.suite("carlitz", {3, 5, 7, 11});
  });

  criterion(12, "Stirling congruences", 120, [](Check& c) {
    c.suite("gl", {3, 5});
    c.verdict(evaluate_eq_1_14(3, 2, 1, 5));
    c.verdict(verify_eq_1_14(5, 2, 1, 5), "4", "4");
  });

  criterion(13, "exact identities", 0, [](Check& c) {
    c.suite("lem2.2", {});
    c.suite("miki", {});
    c.suite("rem1.4", {3, 5, 7});
    c.suite("lem5.1", {});
  });

  criterion(14, "determinism across job counts", 0, [](Check& c) {
    SuiteSpec s;
    s.name = "determinism";
    s.claims = {"thm1.1", "lem3.2", "gl", "wan-int", "gross-koblitz"};
    s.primes = {3, 5};
    s.ranges["n"] = span(0, 20);
    std::vector<std::string> dumps;
    for (long jobs : {1L, 8L, 3L}) {
      s.jobs = jobs;
      std::string d;
      for (const auto& e : run_suite(s).entries) d += to_json(e, false).dump() + "\n";
      dumps.push_back(std::move(d));
    }
    c.points = static_cast<long>(std::count(dumps[0].begin(), dumps[0].end(), '\n'));
    c.require(dumps[0] == dumps[1] && dumps[0] == dumps[2], "reports differ between job counts");
  });

  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  const bool fast = total < 300;
  if (!fast) ++failures;
  std::printf("%s 15 full acceptance run under 5 minutes (%.2fs)\n", fast ? "PASS" : "FAIL", total);
  std::printf("%d of 15 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
