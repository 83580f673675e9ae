#include "pmz/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pmz/symmetry.hpp"
#include "pmz/zero_rules.hpp"

namespace pmz {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial: n out of range 0..20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

Permutation unrank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw DomainError("unrank: rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int k = n; k >= 1; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(out);
}

namespace {

// Splits [0, total) into `chunks` contiguous ranges.
std::pair<std::uint64_t, std::uint64_t> chunk_range(std::uint64_t total, std::size_t chunks,
                                                    std::size_t k) {
  const std::uint64_t lo = total * k / chunks;
  const std::uint64_t hi = total * (k + 1) / chunks;
  return {lo, hi};
}

// Runs body(k) for k in [0, count) on `workers` threads pulling from a
// shared counter. body receives the worker id.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&](unsigned worker) {
    try {
      for (std::size_t k = next++; k < count; k = next++) body(worker, k);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  if (workers == 1) {
    loop(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(loop, w);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

struct AdjacencyTally {
  bool up = false;
  bool down = false;
};

AdjacencyTally tally(const std::vector<int>& v) {
  AdjacencyTally t;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    t.up |= v[i + 1] == v[i] + 1;
    t.down |= v[i + 1] == v[i] - 1;
  }
  return t;
}

}  // namespace

AdjacencyCounts count_adjacency_classes(int n, unsigned workers) {
  if (n < 1 || n > kAdjacencyScanCap) {
    throw DomainError("count_adjacency_classes: n must be in 1.." + std::to_string(kAdjacencyScanCap));
  }
  const std::uint64_t total = factorial(n);
  const std::size_t chunks = std::min<std::uint64_t>(total, 64);
  std::vector<AdjacencyCounts> parts(chunks);
  parallel_chunks(chunks, workers, [&](unsigned, std::size_t k) {
    auto [lo, hi] = chunk_range(total, chunks, k);
    std::vector<int> v = unrank(n, lo).values();
    AdjacencyCounts c;
    for (std::uint64_t r = lo; r < hi; ++r) {
      const AdjacencyTally t = tally(v);
      c.a += !t.up;
      c.b += !t.up && !t.down;
      c.s += t.up && t.down;
      std::next_permutation(v.begin(), v.end());
    }
    parts[k] = c;
  });
  AdjacencyCounts sum;
  for (const auto& c : parts) {
    sum.a += c.a;
    sum.b += c.b;
    sum.s += c.s;
  }
  return sum;
}

AdjacencyCounts adjacency_counts_recurrence(int n) {
  if (n < 1 || n > 20) throw DomainError("adjacency_counts_recurrence: n must be in 1..20");
  // A000255 with offset 0: e(0) = e(1) = 1, e(m) = m e(m-1) + (m-1) e(m-2).
  // Length-n permutations with no up-adjacency number e(n-1).
  std::vector<std::uint64_t> e(std::max(n, 2), 1);
  for (int m = 2; m < n; ++m) e[m] = m * e[m - 1] + (m - 1) * e[m - 2];
  // A002464: f(0) = f(1) = 1, f(2) = f(3) = 0,
  // f(m) = (m+1) f(m-1) - (m-2) f(m-2) - (m-5) f(m-3) + (m-3) f(m-4).
  std::vector<std::int64_t> f(std::max(n + 1, 4), 0);
  f[0] = f[1] = 1;
  for (int m = 4; m <= n; ++m) {
    f[m] = (m + 1) * f[m - 1] - (m - 2) * f[m - 2] - (m - 5) * f[m - 3] + (m - 3) * f[m - 4];
  }
  AdjacencyCounts c;
  c.a = e[n - 1];
  c.b = static_cast<std::uint64_t>(f[n]);
  c.s = factorial(n) - 2 * c.a + c.b;
  return c;
}

std::string CensusRow::density() const {
  if (total == 0) return "0.0000";
  // floor(zero_count * 10^4 / total + 1/2), exact.
  const unsigned __int128 scaled =
      (static_cast<unsigned __int128>(zero_count) * 20000 + total) / (2 * static_cast<unsigned __int128>(total));
  const auto q = static_cast<std::uint64_t>(scaled);
  std::ostringstream out;
  out << q / 10000 << '.' << std::setw(4) << std::setfill('0') << q % 10000;
  return out.str();
}

std::size_t census_chunk_count(int n) {
  return static_cast<std::size_t>(std::min<std::uint64_t>(factorial(n), 256));
}

namespace {

struct ChunkResult {
  bool done = false;
  std::uint64_t zeros = 0;
  std::uint64_t certified = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t s = 0;
  std::uint64_t simple = 0;
  std::uint64_t simple_nonzero = 0;
  std::string audit;
};

constexpr const char* kCheckpointMagic = "pmz-census-checkpoint v1";

std::string checkpoint_header(int n, const CensusOptions& o, std::size_t chunks) {
  std::ostringstream out;
  out << "n " << n << " pruned " << o.pruned << " symmetry " << o.symmetry_reduction << " chunks "
      << chunks;
  return out.str();
}

void load_checkpoint(const std::string& path, const std::string& header,
                     std::vector<ChunkResult>& results) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;  // empty file: fresh start
  if (line != kCheckpointMagic) throw DomainError("checkpoint " + path + ": unknown format");
  if (!std::getline(in, line) || line != header) {
    throw DomainError("checkpoint " + path + " was written for a different census (" + line + ")");
  }
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string tag;
    std::size_t k = 0;
    ChunkResult r;
    if (!(row >> tag >> k >> r.zeros >> r.certified >> r.a >> r.b >> r.s >> r.simple >>
          r.simple_nonzero) ||
        tag != "chunk" || k >= results.size()) {
      break;  // torn final line from an interrupted run
    }
    r.done = true;
    results[k] = r;
  }
}

void write_chunk(std::ostream& out, std::size_t k, const ChunkResult& r) {
  out << "chunk " << k << ' ' << r.zeros << ' ' << r.certified << ' ' << r.a << ' ' << r.b << ' '
      << r.s << ' ' << r.simple << ' ' << r.simple_nonzero << '\n';
}

}  // namespace

CensusRow zero_density(int n, const CensusOptions& options) {
  if (n < 1 || n > 12) throw DomainError("zero_density: n must be in 1..12");
  if (n > kCensusDeskCap && !options.long_run) {
    throw DomainError("zero_density: n > " + std::to_string(kCensusDeskCap) +
                      " needs the long-run flag");
  }
  const std::uint64_t total = factorial(n);
  const std::size_t chunks = census_chunk_count(n);
  std::vector<ChunkResult> results(chunks);
  const bool audit = !options.audit_path.empty();
  const std::string header = checkpoint_header(n, options, chunks);

  std::ofstream checkpoint;
  std::mutex checkpoint_mutex;
  if (!options.checkpoint_path.empty()) {
    load_checkpoint(options.checkpoint_path, header, results);
    const bool resumed = std::any_of(results.begin(), results.end(), [](auto& r) { return r.done; });
    if (resumed && audit) {
      throw DomainError("an audit file cannot be produced when resuming from a checkpoint");
    }
    // Rewritten from what was loaded, which also drops a torn final line.
    checkpoint.open(options.checkpoint_path, std::ios::trunc);
    checkpoint << kCheckpointMagic << '\n' << header << '\n';
    for (std::size_t k = 0; k < chunks; ++k) {
      if (results[k].done) write_chunk(checkpoint, k, results[k]);
    }
    checkpoint << std::flush;
    if (!checkpoint) throw DomainError("cannot write checkpoint " + options.checkpoint_path);
  }

  const unsigned workers = std::max(1u, options.workers);
  std::vector<MobiusCache> caches(workers);

  parallel_chunks(chunks, workers, [&](unsigned worker, std::size_t k) {
    ChunkResult& r = results[k];
    if (r.done) return;
    MobiusCache& cache = caches[worker];
    auto [lo, hi] = chunk_range(total, chunks, k);
    std::vector<int> v = unrank(n, lo).values();
    std::ostringstream audit_out;
    for (std::uint64_t rank = lo; rank < hi; ++rank, std::next_permutation(v.begin(), v.end())) {
      const AdjacencyTally t = tally(v);
      r.a += !t.up;
      r.b += !t.up && !t.down;
      r.s += t.up && t.down;

      const Permutation perm(v);
      std::uint64_t weight = 1;
      if (options.symmetry_reduction) {
        weight = symmetry_canonical(perm) == perm ? orbit_size(perm) : 0;
      }
      if (weight == 0 && !audit) continue;
      const std::int64_t mu = principal_mobius(perm, cache, options.pruned);
      if (audit) audit_out << perm.str() << '\t' << mu << '\n';
      if (weight == 0) continue;

      const bool certified = certify_zero(perm).has_value();
      if (certified && mu != 0) {
        throw std::logic_error("zero certificate issued for " + perm.str() +
                               " with mu = " + std::to_string(mu));
      }
      const bool simple = is_simple(perm);
      r.zeros += mu == 0 ? weight : 0;
      r.certified += certified ? weight : 0;
      r.simple += simple ? weight : 0;
      r.simple_nonzero += simple && mu != 0 ? weight : 0;
    }
    r.audit = audit_out.str();
    r.done = true;
    if (checkpoint.is_open()) {
      std::lock_guard lock(checkpoint_mutex);
      write_chunk(checkpoint, k, r);
      checkpoint << std::flush;
    }
  });

  CensusRow row;
  row.n = n;
  row.total = total;
  for (const ChunkResult& r : results) {
    row.zero_count += r.zeros;
    row.certified_count += r.certified;
    row.a_n += r.a;
    row.b_n += r.b;
    row.s_n += r.s;
    row.simple_count += r.simple;
    row.simple_nonzero_count += r.simple_nonzero;
  }
  if (audit) {
    std::ofstream out(options.audit_path, std::ios::trunc);
    if (!out) throw DomainError("cannot write audit file " + options.audit_path);
    for (const ChunkResult& r : results) out << r.audit;
  }
  if (options.cache) {
    for (const MobiusCache& c : caches) options.cache->merge(c);
  }
  return row;
}

std::string density_bound_report(std::span<const CensusRow> rows) {
  const double limit = std::pow(1.0 - std::exp(-1.0), 2);
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "n s_n/n! (1-1/e)^2 gap d_n check\n";
  for (const CensusRow& row : rows) {
    const double ratio = static_cast<double>(row.s_n) / static_cast<double>(row.total);
    const bool violated = row.zero_count < row.s_n;
    out << row.n << ' ' << ratio << ' ' << limit << ' ' << limit - ratio << ' ' << row.density()
        << ' ' << (violated ? "VIOLATION" : "ok") << '\n';
  }
  return out.str();
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "json") return TableFormat::kJson;
  if (name == "text") return TableFormat::kText;
  throw DomainError("unknown format '" + name + "'");
}

std::string emit_table(std::span<const CensusRow> rows, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::kCsv:
      out << "n,total,zeros,density,certified,a_n,b_n,s_n,simple,simple_nonzero\n";
      for (const CensusRow& r : rows) {
        out << r.n << ',' << r.total << ',' << r.zero_count << ',' << r.density() << ','
            << r.certified_count << ',' << r.a_n << ',' << r.b_n << ',' << r.s_n << ','
            << r.simple_count << ',' << r.simple_nonzero_count << '\n';
      }
      break;
    case TableFormat::kJson: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const CensusRow& r : rows) {
        arr.push_back({{"n", r.n},
                       {"total", r.total},
                       {"zero_count", r.zero_count},
                       {"density", r.density()},
                       {"certified_count", r.certified_count},
                       {"a_n", r.a_n},
                       {"b_n", r.b_n},
                       {"s_n", r.s_n},
                       {"simple_count", r.simple_count},
                       {"simple_nonzero_count", r.simple_nonzero_count}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case TableFormat::kText:
      out << "n d_n\n";
      for (const CensusRow& r : rows) out << r.n << ' ' << r.density() << '\n';
      break;
  }
  return out.str();
}

}  // namespace pmz
