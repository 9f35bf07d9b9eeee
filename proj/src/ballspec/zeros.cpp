#include "heatspec/ballspec/zeros.hpp"

#include "heatspec/ballspec/bessel.hpp"
#include "heatspec/barnes/barnes.hpp"
#include "parallel.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace heatspec::ballspec {

BallConfig::BallConfig(int m_) : m(m_), d_s(barnes::spinor_dimension(m_)) {}

double BallConfig::degeneracy(int n) const { return 4.0 * static_cast<double>(barnes::multiplicity(n, m)); }

std::size_t ZeroTable::total_zeros() const {
  std::size_t n = 0;
  for (const auto& o : orders) n += o.zeros.size();
  return n;
}

ZeroTable build_zero_table(int m, double x_max) {
  const BallConfig cfg(m);
  if (!(x_max > 0.0) || x_max > kMaxArgument)
    throw std::domain_error("build_zero_table: x_max outside (0, 600]");
  ZeroTable table;
  table.m = m;
  table.x_max = x_max;
  // j_{p,1} > p, so orders with p >= x_max have no zeros in range
  std::size_t n_orders = 0;
  while (cfg.p(static_cast<int>(n_orders)) < x_max) ++n_orders;
  if (n_orders > 0 && cfg.p(static_cast<int>(n_orders) - 1) > kMaxOrder)
    throw std::domain_error("build_zero_table: orders beyond 250 required");
  table.orders.resize(n_orders);
  detail::parallel_for(n_orders, [&](std::size_t n) {
    const double p = cfg.p(static_cast<int>(n));
    table.orders[n] = {p, bessel_zeros(p, x_max)};
  });
  while (!table.orders.empty() && table.orders.back().zeros.empty()) table.orders.pop_back();
  return table;
}

namespace {

std::string describe(double p, std::size_t k, const std::string& what) {
  std::ostringstream os;
  os << "order p=" << p << " zero k=" << k + 1 << ": " << what;
  return os.str();
}

}  // namespace

ZeroAudit audit_zero_table(const ZeroTable& table) {
  ZeroAudit audit;
  auto fail = [&](std::string msg) {
    audit.pass = false;
    if (audit.failures.size() < 50) audit.failures.push_back(std::move(msg));
  };
  const auto& ords = table.orders;
  for (std::size_t n = 0; n < ords.size(); ++n) {
    const auto& o = ords[n];
    if (n > 0 && std::abs(o.p - ords[n - 1].p - 1.0) > 1e-12) fail(describe(o.p, 0, "orders not consecutive"));
    for (std::size_t k = 0; k < o.zeros.size(); ++k) {
      const double z = o.zeros[k];
      ++audit.checked_zeros;
      if (!(z > o.p) || z > table.x_max) fail(describe(o.p, k, "zero outside (p, x_max]"));
      if (k > 0 && !(z > o.zeros[k - 1])) fail(describe(o.p, k, "zeros not strictly increasing"));
      const BesselValue v = bessel_j_with_derivative(o.p, z);
      if (std::abs(v.j) > 1e-12 * std::max(1.0, std::abs(v.jp))) fail(describe(o.p, k, "residual above bound"));
    }
    // interlacing with the next order, which has the same count or one fewer
    const std::size_t c = o.zeros.size();
    const std::size_t c_next = n + 1 < ords.size() ? ords[n + 1].zeros.size() : 0;
    if (!(c_next == c || c_next + 1 == c)) fail(describe(o.p, 0, "zero count inconsistent with next order"));
    if (n + 1 < ords.size()) {
      const auto& q = ords[n + 1].zeros;
      for (std::size_t k = 0; k < q.size() && k < c; ++k) {
        if (!(o.zeros[k] < q[k])) fail(describe(o.p, k, "interlacing j_{p,k} < j_{p+1,k} violated"));
        if (k + 1 < c && !(q[k] < o.zeros[k + 1])) fail(describe(o.p, k, "interlacing j_{p+1,k} < j_{p,k+1} violated"));
      }
    }
  }
  // the lowest order anchors the counts: McMahon spacing gives x/pi - p/2 + 1/4
  if (!ords.empty() && ords[0].p < 0.1 * table.x_max) {
    const double expected = table.x_max / std::numbers::pi - 0.5 * ords[0].p + 0.25;
    if (std::abs(static_cast<double>(ords[0].zeros.size()) - expected) > 1.0)
      fail(describe(ords[0].p, 0, "zero count far from asymptotic estimate"));
  }
  return audit;
}

std::filesystem::path zero_cache_dir() {
  const char* env = std::getenv("HEATSPEC_CACHE_DIR");
  return (env && *env) ? std::filesystem::path(env) : std::filesystem::path("cache");
}

std::filesystem::path zero_cache_path(int m, double x_max) {
  char name[96];
  std::snprintf(name, sizeof name, "zeros-m%d-xmax%.17g.txt", m, x_max);
  return zero_cache_dir() / name;
}

void write_zero_cache(const ZeroTable& table, const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write zero cache " + tmp.string());
    char line[96];
    std::snprintf(line, sizeof line, "heatspec-zeros v1 m=%d xmax=%.17g\n", table.m, table.x_max);
    out << line;
    for (const auto& o : table.orders) {
      for (std::size_t k = 0; k < o.zeros.size(); ++k) {
        std::snprintf(line, sizeof line, "%.17g %zu %.17g\n", o.p, k + 1, o.zeros[k]);
        out << line;
      }
    }
    if (!out) throw std::runtime_error("write failed for zero cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot move zero cache into place: " + ec.message());
}

ZeroTable read_zero_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open zero cache " + path.string());
  std::string header;
  std::getline(in, header);
  ZeroTable table;
  char tail = 0;
  if (std::sscanf(header.c_str(), "heatspec-zeros v1 m=%d xmax=%lg%c", &table.m, &table.x_max, &tail) != 2)
    throw std::runtime_error("zero cache header malformed: '" + header + "'");
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream is(line);
    double p = 0.0, z = 0.0;
    std::size_t k = 0;
    std::string extra;
    if (!(is >> p >> k >> z) || (is >> extra))
      throw std::runtime_error("zero cache line " + std::to_string(lineno) + " malformed");
    if (table.orders.empty() || table.orders.back().p != p) table.orders.push_back({p, {}});
    auto& zs = table.orders.back().zeros;
    if (k != zs.size() + 1) throw std::runtime_error("zero cache line " + std::to_string(lineno) + " out of sequence");
    zs.push_back(z);
  }
  return table;
}

std::string to_string(CacheStatus s) {
  switch (s) {
    case CacheStatus::built: return "built";
    case CacheStatus::loaded: return "loaded";
    case CacheStatus::rebuilt: return "rebuilt";
    case CacheStatus::invalid: return "invalid";
  }
  return "unknown";
}

CachedTable load_or_build_zero_table(int m, double x_max, bool refresh) {
  CachedTable out;
  out.path = zero_cache_path(m, x_max);
  bool cache_bad = false;
  if (std::filesystem::exists(out.path)) {
    try {
      ZeroTable cached = read_zero_cache(out.path);
      if (cached.m != m || cached.x_max != x_max) throw std::runtime_error("zero cache header does not match request");
      out.cached_audit = audit_zero_table(cached);
      if (out.cached_audit.pass) {
        if (!refresh) {
          out.table = std::move(cached);
          out.audit = out.cached_audit;
          out.status = CacheStatus::loaded;
          return out;
        }
      } else {
        cache_bad = true;
      }
    } catch (const std::runtime_error& e) {
      out.read_error = e.what();
      out.cached_audit.pass = false;
      out.cached_audit.failures.push_back(e.what());
      cache_bad = true;
    }
    if (cache_bad && !refresh) {
      out.status = CacheStatus::invalid;
      return out;
    }
    out.status = CacheStatus::rebuilt;
  } else {
    out.status = CacheStatus::built;
  }
  out.table = build_zero_table(m, x_max);
  out.audit = audit_zero_table(out.table);
  write_zero_cache(out.table, out.path);
  return out;
}

}  // namespace heatspec::ballspec
