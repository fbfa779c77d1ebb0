// fleckq: batch verification of the congruence claims and single-value
// inspection of the underlying quantities.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fleckq/suite.hpp"

namespace fs = std::filesystem;
using namespace fleckq;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::optional<fs::path> cache_file(const std::string& flag_dir) {
  if (!flag_dir.empty()) return fs::path(flag_dir) / "bernoulli.txt";
  if (const char* env = std::getenv("FLECKQ_CACHE_DIR"); env && *env) return fs::path(env) / "bernoulli.txt";
  return std::nullopt;
}

ExactRat parse_rational(const std::string& s) {
  ExactRat q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw CLI::ValidationError("not a rational: " + s);
  q.canonicalize();
  return q;
}

int run_suites(const std::vector<SuiteSpec>& suites, const std::string& report_override,
               const std::string& format_override) {
  bool ok = true;
  std::map<std::string, std::unique_ptr<std::ofstream>> files;
  for (const auto& spec : suites) {
    const RunReport report = run_suite(spec);
    const std::string path = report_override.empty() ? spec.report : report_override;
    const std::string format = format_override.empty() ? spec.format : format_override;
    std::ostream* out = &std::cout;
    if (!path.empty() && path != "-") {
      auto& f = files[path];
      if (!f) {
        f = std::make_unique<std::ofstream>(path);
        if (!*f) throw std::runtime_error("cannot open report file " + path);
      }
      out = f.get();
    }
    emit_report(report, format, *out);
    if (format == "jsonl" || out != &std::cout) std::cerr << summary_line(report) << '\n';
    ok = ok && report.ok();
  }
  for (auto& [path, f] : files) {
    f->flush();
    if (!*f) throw std::runtime_error("write failed on " + path);
  }
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fleck quotient and Bernoulli congruence verifier"};
  app.require_subcommand(1);
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "Directory for the persisted Bernoulli table (overrides FLECKQ_CACHE_DIR)");

  auto* verify = app.add_subcommand("verify", "Run claim suites over parameter grids");
  std::string config_path, suite_id, report_path, format;
  std::vector<long> primes;
  long n_max = -1, jobs = 0, precision = -1, guard = -1;
  auto* config_opt = verify->add_option("--config", config_path, "Suite configuration file")->check(CLI::ExistingFile);
  auto* suite_opt = verify->add_option("--suite", suite_id, "Claim id, or 'all'");
  config_opt->excludes(suite_opt);
  verify->add_option("--primes", primes, "Comma-separated primes")->delimiter(',');
  verify->add_option("--n-max", n_max, "Upper end of the n range");
  verify->add_option("--report", report_path, "Output path ('-' for stdout)");
  verify->add_option("--format", format, "jsonl or table")->check(CLI::IsMember({"jsonl", "table"}));
  verify->add_option("--jobs", jobs, "Worker threads (0: all available)")->check(CLI::NonNegativeNumber);
  verify->add_option("-M,--precision", precision, "Cyclotomic working precision");
  verify->add_option("--guard", guard, "Cyclotomic precision guard")->check(CLI::NonNegativeNumber);

  auto* list = app.add_subcommand("list", "List registered claims and their grid keys");

  auto* eval = app.add_subcommand("eval", "Evaluate a single quantity");
  eval->require_subcommand(1);
  long p = 5, n = 0, r = 0, m = 1, k = 0, s = 1, a = 1, l = 0, prec = 4;
  std::string t = "0", x = "0";
  auto* e_fleck = eval->add_subcommand("fleck", "F_p(n,r)");
  auto* e_cp = eval->add_subcommand("cp", "C_p(n,r)");
  auto* e_ext = eval->add_subcommand("ext-fleck", "Extended Fleck quotient");
  for (auto* sub : {e_fleck, e_cp, e_ext}) {
    sub->add_option("-p", p)->required();
    sub->add_option("-n", n)->required();
    sub->add_option("-r", r)->required();
  }
  e_ext->add_option("-a", a);
  e_ext->add_option("-l", l);
  auto* e_bern = eval->add_subcommand("bernoulli", "B_k^{(m)} or B_k^{(m)}(t)");
  e_bern->add_option("-m", m, "Order");
  e_bern->add_option("-k", k)->required();
  auto* t_opt = e_bern->add_option("-t", t, "Evaluate the polynomial at this rational");
  auto* e_gamma = eval->add_subcommand("gamma-p", "Morita Gamma_p(x) mod p^M");
  e_gamma->add_option("-p", p)->required();
  e_gamma->add_option("-x", x, "Integer or rational p-adic integer")->required();
  e_gamma->add_option("-M", prec);
  auto* e_gauss = eval->add_subcommand("gauss-sum", "G(s) = sum omega(a)^{-s} zeta^a");
  e_gauss->add_option("-p", p)->required();
  e_gauss->add_option("-s", s)->required();
  e_gauss->add_option("-M", prec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const auto cache = cache_file(cache_dir);
  if (cache) load_bernoulli_cache(*cache);

  int code = 0;
  try {
    if (*verify) {
      std::vector<SuiteSpec> suites;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        std::stringstream buf;
        buf << in.rdbuf();
        suites = parse_config(buf.str());
      } else if (!suite_id.empty()) {
        suites.push_back(make_suite(suite_id));
      } else {
        throw config_error("verify needs --config or --suite");
      }
      for (auto& spec : suites) {
        if (!primes.empty()) spec.primes = primes;
        if (n_max >= 0) spec.n_max = n_max;
        if (jobs > 0) spec.jobs = jobs;
        if (precision >= 0) spec.precision = precision;
        if (guard >= 0) spec.guard = guard;
        for (long q : spec.primes)
          if (!is_prime(q)) throw config_error(std::to_string(q) + " is not prime");
      }
      code = run_suites(suites, report_path, format);
    } else if (*list) {
      for (const auto& c : claim_registry()) {
        std::cout << c.id << "  [" << c.module << "]";
        if (c.uses_prime) std::cout << " p";
        for (const auto& key : c.keys) std::cout << ' ' << key.first;
        std::cout << '\n';
      }
    } else if (*e_fleck) {
      std::cout << fleck_quotient(p, n, r) << '\n';
    } else if (*e_cp) {
      std::cout << c_p(p, n, r) << '\n';
    } else if (*e_ext) {
      std::cout << ext_fleck_quotient(p, a, l, n, r) << '\n';
    } else if (*e_bern) {
      if (t_opt->count() > 0)
        std::cout << to_string(higher_bernoulli_poly(m, k, parse_rational(t))) << '\n';
      else
        std::cout << to_string(higher_bernoulli_number(m, k)) << '\n';
    } else if (*e_gamma) {
      std::cout << p_gamma_padic(p, parse_rational(x), prec).str() << '\n';
    } else if (*e_gauss) {
      std::cout << gauss_sum(p, s, prec).str() << '\n';
    }
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }

  if (cache) {
    try {
      save_bernoulli_cache(*cache);
    } catch (const std::exception& e) {
      std::cerr << "warning: " << e.what() << '\n';
    }
  }
  return code;
}
