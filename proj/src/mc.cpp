#include "pcdpe/mc.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace pcdpe {

namespace {

int resolve_threads(int hint) {
  if (hint > 0) return hint;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Work-stealing loop over [0, count): each worker grabs the next index.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::min(resolve_threads(threads), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct PairInput {
  Bary b;
  int vreg;
};

// Densities of the PCD over `points` restricted to same-triangle pairs, for
// every r in r_list; the arc predicate is evaluated in the identical
// floating-point form used by PcDigraph::build.
void densities_over_r(std::span<const Point> points,
                      std::span<const Triangle> tris,
                      std::span<const int> triangle_of,
                      std::span<const ProximityParam> r_list,
                      std::span<DensityTriple> out) {
  const int n = static_cast<int>(points.size());
  std::vector<PairInput> in(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Bary b =
        tris[static_cast<std::size_t>(triangle_of[i])].barycentric(points[i]);
    in[i] = {b, b.argmax()};
  }
  std::vector<std::uint64_t> arcs(r_list.size(), 0), ands(r_list.size(), 0),
      ors(r_list.size(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (triangle_of[static_cast<std::size_t>(i)] !=
          triangle_of[static_cast<std::size_t>(j)]) {
        continue;
      }
      const PairInput& pi = in[static_cast<std::size_t>(i)];
      const PairInput& pj = in[static_cast<std::size_t>(j)];
      const double ci = 1.0 - pi.b[pi.vreg];
      const double cj = 1.0 - pj.b[pj.vreg];
      const double aij = 1.0 - pj.b[pi.vreg];  // j against i's vertex
      const double aji = 1.0 - pi.b[pj.vreg];
      for (std::size_t k = 0; k < r_list.size(); ++k) {
        bool fwd, rev;
        if (r_list[k].is_infinite()) {
          fwd = rev = true;
        } else {
          const double r = r_list[k].value();
          fwd = aij <= r * ci;
          rev = aji <= r * cj;
        }
        arcs[k] += static_cast<std::uint64_t>(fwd) +
                   static_cast<std::uint64_t>(rev);
        ands[k] += (fwd && rev) ? 1 : 0;
        ors[k] += (fwd || rev) ? 1 : 0;
      }
    }
  }
  const double pairs2 = static_cast<double>(n) * (n - 1);
  for (std::size_t k = 0; k < r_list.size(); ++k) {
    out[k].and_ = 2.0 * static_cast<double>(ands[k]) / pairs2;
    out[k].or_ = 2.0 * static_cast<double>(ors[k]) / pairs2;
    out[k].arc = 0.5 * (out[k].and_ + out[k].or_);
  }
}

ReplicateResult one_replicate(const McConfig& cfg, int index) {
  ReplicateResult res;
  res.index = index;
  res.by_r.resize(cfg.r_list.size());
  const RngSeed seed{cfg.seed, static_cast<std::uint64_t>(index)};
  if (std::holds_alternative<Triangle>(cfg.geometry)) {
    const Triangle& tri = std::get<Triangle>(cfg.geometry);
    const auto pts = sample(tri, cfg.pattern, cfg.n, seed);
    const std::vector<int> zeros(pts.size(), 0);
    densities_over_r(pts, std::span<const Triangle>(&tri, 1), zeros,
                     cfg.r_list, res.by_r);
  } else {
    const DelaunayMesh& mesh = std::get<DelaunayMesh>(cfg.geometry);
    const auto mp = sample_mesh(mesh, cfg.pattern, cfg.n, seed);
    std::vector<Point> pts(mp.size());
    std::vector<int> owner(mp.size());
    for (std::size_t i = 0; i < mp.size(); ++i) {
      pts[i] = mp[i].p;
      owner[i] = mp[i].triangle;
    }
    std::vector<Triangle> tris;
    tris.reserve(static_cast<std::size_t>(mesh.triangle_count()));
    for (int t = 0; t < mesh.triangle_count(); ++t) {
      tris.push_back(mesh.triangle(t));
    }
    densities_over_r(pts, tris, owner, cfg.r_list, res.by_r);
  }
  return res;
}

// Checkpoint record: {"i": index, "d": [[arc, and, or], ...]}.
bool parse_checkpoint_line(const std::string& line, std::size_t n_r,
                           ReplicateResult& out) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.contains("i") || !j.contains("d")) return false;
  const auto& d = j["d"];
  if (!d.is_array() || d.size() != n_r) return false;
  out.index = j["i"].get<int>();
  out.by_r.clear();
  for (const auto& row : d) {
    if (!row.is_array() || row.size() != 3) return false;
    out.by_r.push_back(
        {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
  }
  return true;
}

}  // namespace

std::vector<ReplicateResult> run_replicates(const McConfig& cfg) {
  if (cfg.n_mc < 0) throw DomainError("replicate count must be >= 0");
  if (cfg.r_list.empty()) throw DomainError("r list must not be empty");
  std::vector<ReplicateResult> results(static_cast<std::size_t>(cfg.n_mc));
  std::vector<char> done(static_cast<std::size_t>(cfg.n_mc), 0);

  std::ofstream sink;
  std::mutex sink_mu;
  if (!cfg.checkpoint_path.empty()) {
    std::ifstream in(cfg.checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      ReplicateResult r;
      if (parse_checkpoint_line(line, cfg.r_list.size(), r) && r.index >= 0 &&
          r.index < cfg.n_mc) {
        results[static_cast<std::size_t>(r.index)] = std::move(r);
        done[static_cast<std::size_t>(r.index)] = 1;
      }
    }
    sink.open(cfg.checkpoint_path, std::ios::app);
  }

  parallel_for(cfg.n_mc, cfg.threads, [&](int k) {
    if (done[static_cast<std::size_t>(k)]) return;
    ReplicateResult r = one_replicate(cfg, k);
    if (sink.is_open()) {
      nlohmann::json row;
      row["i"] = r.index;
      auto& d = row["d"] = nlohmann::json::array();
      for (const auto& t : r.by_r) {
        d.push_back({t.arc, t.and_, t.or_});
      }
      std::lock_guard<std::mutex> lock(sink_mu);
      sink << row.dump() << '\n';
    }
    results[static_cast<std::size_t>(k)] = std::move(r);
  });
  return results;
}

SampleMoments estimate_moments(std::span<const double> xs) {
  if (xs.size() < 2) {
    throw DomainError("moment estimation needs at least 2 values");
  }
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, ss / static_cast<double>(xs.size() - 1)};
}

KernelCovEstimate estimate_kernel_cov(const Triangle& tri,
                                      const PatternSpec& pattern,
                                      ProximityParam r, EdgeMode mode,
                                      std::uint64_t n_triples, RngSeed seed,
                                      int threads) {
  constexpr int kBatches = 128;
  if (n_triples < kBatches) {
    throw DomainError("kernel covariance estimation needs more triples");
  }
  const std::uint64_t per_batch = n_triples / kBatches;
  std::vector<double> prod_mean(kBatches, 0.0), kern_mean(kBatches, 0.0);

  parallel_for(kBatches, threads, [&](int b) {
    Philox rng(seed.master, seed.stream + static_cast<std::uint64_t>(b));
    std::uint64_t prod = 0, kern = 0;
    for (std::uint64_t t = 0; t < per_batch; ++t) {
      const auto draw = [&]() {
        while (true) {
          double u = rng.uniform();
          double v = rng.uniform();
          if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
          }
          const Point p = tri.from_barycentric({1.0 - u - v, u, v});
          if (pattern_accepts(tri, pattern, p)) return p;
        }
      };
      const Point x1 = draw();
      const Point x2 = draw();
      const Point x3 = draw();
      const bool h12 = mode == EdgeMode::And
                           ? in_proximity_region(tri, r, x1, x2) &&
                                 in_gamma1_region(tri, r, x1, x2)
                           : in_proximity_region(tri, r, x1, x2) ||
                                 in_gamma1_region(tri, r, x1, x2);
      const bool h13 = mode == EdgeMode::And
                           ? in_proximity_region(tri, r, x1, x3) &&
                                 in_gamma1_region(tri, r, x1, x3)
                           : in_proximity_region(tri, r, x1, x3) ||
                                 in_gamma1_region(tri, r, x1, x3);
      prod += (h12 && h13) ? 1 : 0;
      kern += static_cast<std::uint64_t>(h12) + static_cast<std::uint64_t>(h13);
    }
    prod_mean[static_cast<std::size_t>(b)] =
        static_cast<double>(prod) / static_cast<double>(per_batch);
    kern_mean[static_cast<std::size_t>(b)] =
        static_cast<double>(kern) / (2.0 * static_cast<double>(per_batch));
  });

  KernelCovEstimate est;
  est.n_triples = per_batch * kBatches;
  std::vector<double> nu_b(kBatches);
  double nu_sum = 0.0, mu_sum = 0.0;
  for (int b = 0; b < kBatches; ++b) {
    nu_b[static_cast<std::size_t>(b)] =
        prod_mean[static_cast<std::size_t>(b)] -
        kern_mean[static_cast<std::size_t>(b)] *
            kern_mean[static_cast<std::size_t>(b)];
    nu_sum += nu_b[static_cast<std::size_t>(b)];
    mu_sum += kern_mean[static_cast<std::size_t>(b)];
  }
  est.nu_hat = nu_sum / kBatches;
  est.mu_hat = mu_sum / kBatches;
  double ss = 0.0;
  for (double v : nu_b) ss += (v - est.nu_hat) * (v - est.nu_hat);
  est.se = std::sqrt(ss / (kBatches - 1) / kBatches);
  return est;
}

std::vector<double> density_column(std::span<const ReplicateResult> results,
                                   int r_index, DensityKind kind) {
  std::vector<double> out;
  out.reserve(results.size());
  for (const auto& r : results) {
    const DensityTriple& t = r.by_r[static_cast<std::size_t>(r_index)];
    out.push_back(kind == DensityKind::Arc
                      ? t.arc
                      : (kind == DensityKind::And ? t.and_ : t.or_));
  }
  return out;
}

}  // namespace pcdpe
