#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fleckq {

/// Grid point parameters, kept in insertion order so reports are stable.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, long>> init) : items_(init) {}

  Params& set(const std::string& key, long value) {
    for (auto& [k, v] : items_)
      if (k == key) {
        v = value;
        return *this;
      }
    items_.emplace_back(key, value);
    return *this;
  }

  bool has(const std::string& key) const {
    for (const auto& item : items_)
      if (item.first == key) return true;
    return false;
  }

  long get(const std::string& key) const {
    for (const auto& [k, v] : items_)
      if (k == key) return v;
    throw std::invalid_argument("missing parameter '" + key + "'");
  }

  long get_or(const std::string& key, long fallback) const { return has(key) ? get(key) : fallback; }

  const std::vector<std::pair<std::string, long>>& items() const { return items_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  std::vector<std::pair<std::string, long>> items_;
};

/// Congruence modulus p^p_exponent * pi^pi_exponent. With exact set, the
/// comparison is exact equality (for cyclotomic checks: equality at the
/// working precision p^p_exponent).
struct Modulus {
  long prime = 0;
  long p_exponent = 0;
  long pi_exponent = 0;
  bool exact = false;

  static Modulus power(long p, long e) { return {p, e, 0, false}; }
  static Modulus with_pi(long p, long e, long pi_e) { return {p, e, pi_e, false}; }
  static Modulus equality() { return {0, 0, 0, true}; }
  static Modulus at_precision(long p, long m) { return {p, m, 0, true}; }

  std::string describe() const {
    if (prime == 0) return exact ? "exact" : "-";
    std::string s = "p=" + std::to_string(prime) + "^" + std::to_string(p_exponent);
    if (pi_exponent != 0) s += " pi^" + std::to_string(pi_exponent);
    if (exact) s += " (exact at precision)";
    return s;
  }

  friend bool operator==(const Modulus&, const Modulus&) = default;
};

enum class Status { Pass, Fail, Skipped, Errored };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Errored: return "errored";
  }
  return "?";
}

/// Outcome of one congruence check.
struct Verdict {
  std::string claim_id;
  Params params;
  Modulus modulus;
  std::string lhs;
  std::string rhs;
  Status status = Status::Fail;
  std::string detail;

  bool pass() const { return status == Status::Pass; }

  static Verdict decided(std::string claim, Params params, Modulus mod, std::string lhs,
                         std::string rhs, bool ok, std::string detail = {}) {
    return {std::move(claim), std::move(params), mod, std::move(lhs), std::move(rhs),
            ok ? Status::Pass : Status::Fail, std::move(detail)};
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

using ClaimFn = std::function<Verdict(const Params&)>;

/// A computation would exceed a configured cap (table size, enumeration size).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cyclotomic check was asked to run at a precision too low to decide it.
class precision_error : public std::runtime_error {
 public:
  precision_error(const std::string& what, long minimal_precision)
      : std::runtime_error(what + " (minimal adequate precision M=" +
                           std::to_string(minimal_precision) + ")"),
        minimal_precision_(minimal_precision) {}
  long minimal_precision() const { return minimal_precision_; }

 private:
  long minimal_precision_;
};

/// A divisibility guaranteed by a theorem failed. Never expected.
class integrity_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Grid point outside the claim's hypotheses. The grid runner counts these
/// as skipped, not failed.
class hypothesis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fleckq
