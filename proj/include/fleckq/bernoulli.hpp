#pragma once

// Bernoulli numbers and polynomials of order m >= 0.
//
// B_k^{(m)} / k! is the coefficient of x^k in (x/(e^x-1))^m. Order-1 values
// come from the classical recurrence; higher orders from repeated truncated
// series multiplication. Both are memoized in process-wide caches guarded by
// a mutex, so concurrent callers see identical values.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "fleckq/exact.hpp"
#include "fleckq/verdict.hpp"

namespace fleckq {

inline constexpr long kDefaultBernoulliCap = 4000;
inline constexpr long kDefaultPartitionCap = 16;

namespace detail {

class BernoulliCache {
 public:
  static BernoulliCache& instance() {
    static BernoulliCache cache;
    return cache;
  }

  ExactRat number(long k) {
    if (k < 0) throw std::invalid_argument("bernoulli_number: k must be nonnegative");
    if (k > cap_) throw resource_error("bernoulli_number: k=" + std::to_string(k) +
                                       " exceeds Bernoulli cap " + std::to_string(cap_));
    std::lock_guard lock(mu_);
    extend_numbers(k);
    return numbers_[static_cast<std::size_t>(k)];
  }

  /// Coefficients B_j^{(m)}/j! for j = 0..k.
  std::vector<ExactRat> series(long m, long k) {
    if (m < 0 || k < 0) throw std::invalid_argument("bernoulli series: negative order or degree");
    if (k > cap_) throw resource_error("higher-order Bernoulli degree exceeds cap");
    std::lock_guard lock(mu_);
    if (k > series_degree_) rebuild_series(std::max<long>({k, 2 * series_degree_, 32}));
    while (static_cast<long>(orders_.size()) <= m) {
      const auto& prev = orders_.back();
      orders_.push_back(multiply(prev, orders_[1]));
    }
    const auto& s = orders_[static_cast<std::size_t>(m)];
    return {s.begin(), s.begin() + k + 1};
  }

  long cap() const { return cap_; }
  void set_cap(long cap) { cap_ = cap; }

  long cached_count() {
    std::lock_guard lock(mu_);
    return static_cast<long>(numbers_.size());
  }

  void seed(std::vector<ExactRat> values) {
    std::lock_guard lock(mu_);
    if (values.size() > numbers_.size()) numbers_ = std::move(values);
  }

  std::vector<ExactRat> snapshot() {
    std::lock_guard lock(mu_);
    return numbers_;
  }

 private:
  BernoulliCache() : numbers_{ExactRat(1)} {}

  // sum_{j=0}^{k} binom(k+1, j) B_j = 0; odd j > 1 contribute nothing.
  void extend_numbers(long k) {
    for (long n = static_cast<long>(numbers_.size()); n <= k; ++n) {
      if (n > 1 && n % 2 == 1) {
        numbers_.emplace_back(0);
        continue;
      }
      ExactRat acc = 0;
      ExactInt c = 1;  // binom(n+1, j), updated incrementally
      for (long j = 0; j < n; ++j) {
        if (j == 0 || j == 1 || j % 2 == 0) acc += c * numbers_[static_cast<std::size_t>(j)];
        c = c * (n + 1 - j) / (j + 1);
      }
      ExactRat b = -acc / (n + 1);
      b.canonicalize();
      numbers_.push_back(std::move(b));
    }
  }

  std::vector<ExactRat> multiply(const std::vector<ExactRat>& a, const std::vector<ExactRat>& b) const {
    std::vector<ExactRat> out(static_cast<std::size_t>(series_degree_ + 1), ExactRat(0));
    for (long i = 0; i <= series_degree_; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      for (long j = 0; i + j <= series_degree_; ++j)
        out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    for (auto& c : out) c.canonicalize();
    return out;
  }

  void rebuild_series(long degree) {
    degree = std::min(degree, cap_);
    extend_numbers(degree);
    series_degree_ = degree;
    std::vector<ExactRat> unit(static_cast<std::size_t>(degree + 1), ExactRat(0));
    unit[0] = 1;
    std::vector<ExactRat> base(static_cast<std::size_t>(degree + 1));
    ExactInt fact = 1;
    for (long j = 0; j <= degree; ++j) {
      if (j > 0) fact *= j;
      base[static_cast<std::size_t>(j)] = numbers_[static_cast<std::size_t>(j)] / fact;
      base[static_cast<std::size_t>(j)].canonicalize();
    }
    std::size_t keep = std::max<std::size_t>(orders_.size(), 2);
    orders_.clear();
    orders_.push_back(std::move(unit));
    orders_.push_back(std::move(base));
    while (orders_.size() < keep) orders_.push_back(multiply(orders_.back(), orders_[1]));
  }

  std::mutex mu_;
  long cap_ = kDefaultBernoulliCap;
  std::vector<ExactRat> numbers_;
  long series_degree_ = -1;
  std::vector<std::vector<ExactRat>> orders_;
};

}  // namespace detail

/// Exact classical Bernoulli number B_k (B_1 = -1/2).
inline ExactRat bernoulli_number(long k) { return detail::BernoulliCache::instance().number(k); }

/// B_k^{(m)}; B_k^{(0)} = [k == 0].
inline ExactRat higher_bernoulli_number(long m, long k) {
  auto s = detail::BernoulliCache::instance().series(m, k);
  return s[static_cast<std::size_t>(k)] * factorial(k);
}

/// Values B_0^{(m)}, ..., B_K^{(m)}.
struct BernoulliTable {
  long order = 0;
  std::vector<ExactRat> values;
};

inline BernoulliTable bernoulli_table(long m, long max_k) {
  auto s = detail::BernoulliCache::instance().series(m, max_k);
  BernoulliTable t{m, {}};
  t.values.reserve(s.size());
  ExactInt fact = 1;
  for (long j = 0; j <= max_k; ++j) {
    if (j > 0) fact *= j;
    t.values.push_back(s[static_cast<std::size_t>(j)] * fact);
  }
  return t;
}

/// B_k^{(m)}(t) = sum_j binom(k,j) B_j^{(m)} t^{k-j}.
inline ExactRat higher_bernoulli_poly(long m, long k, const ExactRat& t) {
  const auto table = bernoulli_table(m, k);
  // Horner in t over coefficients binom(k,j) B_j^{(m)}, highest power first.
  ExactRat acc = 0;
  for (long j = 0; j <= k; ++j) acc = acc * t + binomial(k, j) * table.values[static_cast<std::size_t>(j)];
  acc.canonicalize();
  return acc;
}

inline ExactRat bernoulli_poly(long k, const ExactRat& t) { return higher_bernoulli_poly(1, k, t); }

/// Checks the logarithmic-derivative identity expressing m(-1)^k B_k/(k! k)
/// as a sum over the partitions of k of products of B_j^{(m)}/j!.
inline Verdict verify_lemma_2_2(long m, long k, long partition_cap = kDefaultPartitionCap) {
  if (k < 1) throw std::invalid_argument("verify_lemma_2_2: k must be positive");
  if (m < 0) throw std::invalid_argument("verify_lemma_2_2: m must be nonnegative");
  if (k > partition_cap)
    throw resource_error("verify_lemma_2_2: k=" + std::to_string(k) + " exceeds partition cap " +
                         std::to_string(partition_cap));

  const auto series = detail::BernoulliCache::instance().series(m, k);
  std::vector<long> mult(static_cast<std::size_t>(k + 1), 0);  // mult[j] = i_j
  ExactRat lhs = 0;

  // Partitions of k as multiplicity vectors, parts taken from largest down.
  auto visit = [&](auto&& self, long remaining, long max_part) -> void {
    if (remaining == 0) {
      long parts = 0;
      ExactInt denom = 1;
      ExactRat prod = 1;
      for (long j = 1; j <= k; ++j) {
        const long i = mult[static_cast<std::size_t>(j)];
        if (i == 0) continue;
        parts += i;
        denom *= factorial(i);
        prod *= ipow(series[static_cast<std::size_t>(j)], i);
      }
      lhs += sign_pow(parts) * ExactRat(factorial(parts - 1)) / denom * prod;
      return;
    }
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
      ++mult[static_cast<std::size_t>(part)];
      self(self, remaining - part, part);
      --mult[static_cast<std::size_t>(part)];
    }
  };
  visit(visit, k, k);
  lhs.canonicalize();

  ExactRat rhs = ExactRat(m * sign_pow(k)) * bernoulli_number(k) / (factorial(k) * k);
  rhs.canonicalize();
  return Verdict::decided("lem2.2", {{"m", m}, {"k", k}}, Modulus::equality(), to_string(lhs),
                          to_string(rhs), lhs == rhs);
}

/// Polynomial form of Miki's identity at the point t.
inline Verdict verify_miki_poly(long n, const ExactRat& t) {
  if (n < 2) throw std::invalid_argument("verify_miki_poly: n must be at least 2");
  std::vector<ExactRat> bt(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) bt[static_cast<std::size_t>(k)] = bernoulli_poly(k, t);

  ExactRat lhs = harmonic(n - 1) * bt[static_cast<std::size_t>(n)];
  for (long k = 2; k <= n; ++k)
    lhs += binomial(n, k) * bernoulli_number(k) / k * bt[static_cast<std::size_t>(n - k)];
  ExactRat rhs = 0;
  for (long k = 1; k < n; ++k) rhs += bt[static_cast<std::size_t>(k)] / k * bt[static_cast<std::size_t>(n - k)];
  lhs.canonicalize();
  rhs.canonicalize();
  Params params{{"n", n}};
  return Verdict::decided("miki", params, Modulus::equality(), to_string(lhs), to_string(rhs), lhs == rhs,
                          "t=" + to_string(t));
}

/// Optional on-disk persistence of B_0..B_K as "k num/den" lines.
inline void save_bernoulli_cache(const std::filesystem::path& file) {
  const auto values = detail::BernoulliCache::instance().snapshot();
  std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write Bernoulli cache " + file.string());
  for (std::size_t k = 0; k < values.size(); ++k) out << k << ' ' << to_string(values[k]) << '\n';
}

/// Loads a cache written by save_bernoulli_cache. A malformed or gapped file
/// is ignored and false returned.
inline bool load_bernoulli_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  std::vector<ExactRat> values;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::size_t k = 0;
    std::string value;
    if (!(ls >> k >> value) || k != values.size()) return false;
    ExactRat q;
    if (q.set_str(value, 10) != 0) return false;
    q.canonicalize();
    values.push_back(q);
  }
  if (values.empty() || values[0] != 1) return false;
  detail::BernoulliCache::instance().seed(std::move(values));
  return true;
}

}  // namespace fleckq
