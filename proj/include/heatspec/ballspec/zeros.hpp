#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace heatspec::ballspec {

/// Unit-ball spectral data for even m >= 4: orders p = n + m/2 - 1 with
/// multiplicity 4 d_n(m).
struct BallConfig {
  int m = 4;
  long d_s = 4;

  explicit BallConfig(int m);
  double p(int n) const { return n + 0.5 * m - 1.0; }
  /// 4 d_n(m), the degeneracy of every zero of J_{p(n)}.
  double degeneracy(int n) const;
};

struct OrderZeros {
  double p = 0.0;
  std::vector<double> zeros;
};

/// Zeros of J_{p(n)} up to x_max for every order with a zero below x_max.
struct ZeroTable {
  int m = 4;
  double x_max = 0.0;
  std::vector<OrderZeros> orders;  // index n

  std::size_t total_zeros() const;
};

ZeroTable build_zero_table(int m, double x_max);

struct ZeroAudit {
  bool pass = true;
  std::size_t checked_zeros = 0;
  std::vector<std::string> failures;
};

/// Monotonicity, interlacing, per-order counts and residual bounds
/// |J_p(j)| <= 1e-12 max(1, |J_p'(j)|).
ZeroAudit audit_zero_table(const ZeroTable& table);

/// Cache directory from HEATSPEC_CACHE_DIR, default ./cache.
std::filesystem::path zero_cache_dir();
std::filesystem::path zero_cache_path(int m, double x_max);
void write_zero_cache(const ZeroTable& table, const std::filesystem::path& path);
/// Throws std::runtime_error on I/O or format errors.
ZeroTable read_zero_cache(const std::filesystem::path& path);

enum class CacheStatus { built, loaded, rebuilt, invalid };
std::string to_string(CacheStatus s);

struct CachedTable {
  ZeroTable table;
  CacheStatus status = CacheStatus::built;
  std::filesystem::path path;
  ZeroAudit audit;                  // audit of the returned table
  ZeroAudit cached_audit;           // audit of the rejected cache file, if any
  std::string read_error;
};

/// Loads the table from the cache when present and valid; builds and writes
/// it when absent. A cache file that fails to parse or audit is reported: with
/// refresh it is rebuilt, otherwise the status is invalid and the table empty.
CachedTable load_or_build_zero_table(int m, double x_max, bool refresh = false);

}  // namespace heatspec::ballspec
