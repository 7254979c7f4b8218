#include "troplines/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

#include "troplines/errors.hpp"
#include "troplines/json_io.hpp"

namespace troplines {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void validate(const SweepParams& p) {
  if (p.n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (p.jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");
  if (p.mode == SweepMode::Exhaustive) {
    if (p.grid_size < 2 || static_cast<long>(p.grid_size) * p.grid_size < p.n) {
      throw Error(ErrorCode::GridTooSmall, "grid " + std::to_string(p.grid_size) +
                                               " cannot hold " + std::to_string(p.n) + " points");
    }
  } else {
    if (p.samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
    const long side = 2L * p.coord_range + 1;
    if (p.coord_range < 1 || side * side < p.n) {
      throw Error(ErrorCode::RangeTooSmall, "range " + std::to_string(p.coord_range) +
                                                " cannot hold " + std::to_string(p.n) + " points");
    }
  }
}

ConfigEnumerator::ConfigEnumerator(int n, int grid_size) : n_(n), grid_(grid_size) {
  if (n < 1 || grid_size < 2 || static_cast<long>(grid_size) * grid_size < n) {
    throw Error(ErrorCode::GridTooSmall, "grid " + std::to_string(grid_size) + " cannot hold " +
                                             std::to_string(n) + " points");
  }
  total_ = binomial(static_cast<std::uint64_t>(grid_size) * grid_size, n);
}

std::optional<PointConfig> ConfigEnumerator::next() {
  if (done_) return std::nullopt;
  const int cells = grid_ * grid_;
  if (idx_.empty()) {
    idx_.resize(n_);
    for (int k = 0; k < n_; ++k) idx_[k] = k;
  } else {
    int k = n_ - 1;
    while (k >= 0 && idx_[k] == cells - n_ + k) --k;
    if (k < 0) {
      done_ = true;
      return std::nullopt;
    }
    ++idx_[k];
    for (int m = k + 1; m < n_; ++m) idx_[m] = idx_[m - 1] + 1;
  }
  std::vector<Point2> pts;
  pts.reserve(n_);
  for (int c : idx_) pts.push_back({c / grid_, c % grid_});
  return PointConfig(std::move(pts));
}

PointConfig random_config(int n, int coord_range, std::mt19937_64& rng) {
  const long side = 2L * coord_range + 1;
  if (coord_range < 1 || side * side < n) {
    throw Error(ErrorCode::RangeTooSmall, "range " + std::to_string(coord_range) +
                                              " cannot hold " + std::to_string(n) + " points");
  }
  std::uniform_int_distribution<long> coord(-coord_range, coord_range);
  std::set<std::pair<long, long>> seen;
  std::vector<Point2> pts;
  while (static_cast<int>(pts.size()) < n) {
    const long x = coord(rng);
    const long y = coord(rng);
    if (seen.emplace(x, y).second) pts.push_back({x, y});
  }
  return PointConfig(std::move(pts));
}

std::mt19937_64 config_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace {

void check_structure(const DualSubdivision& sub, const Counts& counts, ConfigResult& r) {
  auto add = [&r](std::string inv, std::string details) {
    r.violations.push_back({std::move(inv), std::move(details)});
  };
  if (counts.t == counts.n && counts.triangles > 3) {
    add("max_triangles", "t = n = " + std::to_string(counts.n) + " with " +
                             std::to_string(counts.triangles) + " triangles");
  }
  std::set<std::size_t> all;
  std::size_t m = 0;
  for (std::size_t idx = 0; idx < sub.cells.size(); ++idx) {
    const CellPolygon& cell = sub.cells[idx];
    if (cell.cls != CellClass::Triangle || is_corner_triangle(cell, sub.n)) continue;
    ++m;
    const auto faces = determined_faces(sub, idx);
    const int edges = boundary_edge_count(cell, sub.n);
    if (edges == 0 && faces.size() < 3) {
      add("interior_triangle_determines", "interior triangle at " + cell.dual_point.to_string() +
                                              " determines " + std::to_string(faces.size()));
    }
    if (edges == 1 && faces.empty()) {
      add("boundary_triangle_determines",
          "boundary triangle at " + cell.dual_point.to_string() + " determines nothing");
    }
    for (std::size_t f : faces) {
      all.insert(f);
    }
  }
  r.determined_union = all.size();
  r.noncorner_triangles = m;
  if (!(counts.k >= all.size() && all.size() >= m)) {
    add("determined_union", "k = " + std::to_string(counts.k) + ", union = " +
                                std::to_string(all.size()) + ", m = " + std::to_string(m));
  }
  // A parallelogram touching triangles along both pairs of parallel edges
  // inherits unit edge lengths from them.
  for (const CellPolygon& cell : sub.cells) {
    if (cell.cls != CellClass::Parallelogram) continue;
    const auto& v = cell.vertices;
    bool touched[2] = {false, false};
    bool unit = true;
    for (std::size_t e = 0; e < v.size(); ++e) {
      const LatticePoint a = v[e];
      const LatticePoint b = v[(e + 1) % v.size()];
      unit = unit && lattice_length(a, b) == 1;
      for (const CellPolygon& other : sub.cells) {
        if (other.cls == CellClass::Triangle && shares_edge(other, a, b)) touched[e % 2] = true;
      }
    }
    if (touched[0] && touched[1] && !unit) {
      add("unit_parallelogram", "parallelogram at " + cell.dual_point.to_string() +
                                    " bordered by triangles on both sides has a long edge");
    }
  }
}

}  // namespace

ConfigResult check_config(const PointConfig& cfg, std::uint32_t checks) {
  ConfigResult r;
  r.points = cfg.points();
  auto add = [&r](std::string inv, std::string details) {
    r.violations.push_back({std::move(inv), std::move(details)});
  };
  try {
    const Arrangement arr = dualize_points(cfg);
    ArrangementAnalysis an;
    try {
      an = analyze(arr);
    } catch (const Error& e) {
      add("counts", e.what());
      return r;
    }
    r.counts = an.counts;
    r.stable_lines = stable_lines_from_dual(an).size();

    if (checks & kCheckCounts) {
      if (auto bad = count_identity_violation(r.counts)) add("counts", *bad);
    }
    if (checks & kCheckCrossOracle) {
      std::set<Point2> pairwise;
      const auto& lines = arr.lines();
      for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
          pairwise.insert(pairwise_stable_intersection(lines[a], lines[b]).point);
        }
      }
      std::set<Point2> faces;
      for (const auto& rec : an.vertices) {
        if (rec.cell.cls != CellClass::Triangle) faces.insert(rec.data.point);
      }
      if (pairwise != faces) {
        add("cross_oracle", std::to_string(pairwise.size()) + " pairwise stable intersections vs " +
                                std::to_string(faces.size()) + " non-triangular cells");
      }
      if (r.stable_lines != r.counts.b) {
        add("duality_count", std::to_string(r.stable_lines) + " stable lines vs b = " +
                                 std::to_string(r.counts.b));
      }
    }

    DualSubdivision sub;
    try {
      sub = dual_subdivision(arr, an);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TilingFailure) throw;
      add("tiling", e.what());
      return r;
    }
    r.near_pencil = is_near_pencil(sub);
    if (checks & kCheckTiling) {
      const auto reg = check_regularity(sub);
      r.regular = reg.regular;
      if (!reg) add("regularity", reg.diagnostic);
    }

    if ((checks & kCheckDbe) && cfg.size() >= 4) {
      const DbeVerdict verdict = dbe_verdict(cfg.size(), r.stable_lines, r.near_pencil);
      if (!verdict.bound_holds) {
        add("dbe_bound", "b = " + std::to_string(verdict.b) + " < v - 3 = " +
                             std::to_string(verdict.v - 3));
      }
      if (!verdict.consistent) add("dbe_near_pencil", "b = v - 3 but not a near-pencil");
      if (verdict.equality) {
        int corners = 0;
        int inner = 0;
        for (const auto& c : sub.cells) {
          if (c.cls != CellClass::Triangle) continue;
          if (is_corner_triangle(c, sub.n)) {
            ++corners;
          } else if (boundary_edge_count(c, sub.n) == 0) {
            ++inner;
          }
        }
        if (corners != 3 || inner != 0) {
          add("sharp_corners", std::to_string(corners) + " corner and " + std::to_string(inner) +
                                   " interior triangles at b = v - 3");
        }
      }
    }
    if (checks & kCheckStructure) check_structure(sub, r.counts, r);
  } catch (const std::exception& e) {
    add("internal_error", e.what());
  }
  return r;
}

SweepReport run_sweep(const SweepParams& params, std::ostream* jsonl) {
  validate(params);
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;

  const bool exhaustive = params.mode == SweepMode::Exhaustive;
  std::optional<ConfigEnumerator> enumerator;
  std::uint64_t total = params.samples;
  if (exhaustive) {
    enumerator.emplace(params.n, params.grid_size);
    total = enumerator->total();
  }

  constexpr std::uint64_t kChunk = 2048;
  const unsigned jobs = std::max(1U, params.jobs);
  for (std::uint64_t first = 0; first < total; first += kChunk) {
    const std::uint64_t count = std::min(kChunk, total - first);
    std::vector<std::optional<PointConfig>> configs(count);
    if (exhaustive) {
      for (std::uint64_t k = 0; k < count; ++k) {
        auto cfg = enumerator->next();
        if (params.canonical_translates) {
          const auto& pts = cfg->points();
          const bool touches_x = std::any_of(pts.begin(), pts.end(), [](auto& p) { return p.x == 0; });
          const bool touches_y = std::any_of(pts.begin(), pts.end(), [](auto& p) { return p.y == 0; });
          if (!touches_x || !touches_y) continue;
        }
        configs[k] = std::move(cfg);
      }
    }

    std::vector<std::optional<ConfigResult>> results(count);
    auto work = [&](unsigned worker) {
      for (std::uint64_t k = worker; k < count; k += jobs) {
        if (!exhaustive) {
          auto rng = config_rng(params.seed, first + k);
          configs[k] = random_config(params.n, params.coord_range, rng);
        }
        if (!configs[k]) continue;
        results[k] = check_config(*configs[k], params.checks);
        results[k]->index = first + k;
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    }

    for (auto& r : results) {
      if (!r) continue;
      ++report.configs_tested;
      ++report.histogram[static_cast<long>(r->counts.b) - (params.n - 3)];
      for (auto& v : r->violations) {
        report.violations.push_back({r->index, r->points, v.invariant, v.details});
      }
      if (jsonl) *jsonl << io::to_json(*r).dump() << '\n';
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

SgSearchResult sg_failure_search(int n, int grid_size, std::uint64_t budget,
                                 std::size_t max_witnesses) {
  if (n != 4 && n != 5) {
    throw Error(ErrorCode::InvalidArgument, "the ordinary-line search runs for n = 4 or 5 only");
  }
  SgSearchResult out;
  ConfigEnumerator en(n, grid_size);
  while (out.witnesses.size() < max_witnesses) {
    if (out.examined >= budget) {
      out.budget_exhausted = true;
      break;
    }
    auto cfg = en.next();
    if (!cfg) {
      out.budget_exhausted = true;
      break;
    }
    ++out.examined;
    if (ordinary_stable_lines(*cfg).empty()) out.witnesses.push_back(std::move(*cfg));
  }
  return out;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("TROPLINES_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace troplines
