#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "troplines/incidence.hpp"

namespace troplines {

/// Invariant suites a sweep can run; combine with |.
enum Check : std::uint32_t {
  kCheckDbe = 1U << 0,          // b >= n - 3, equality implies near-pencil and corner triangles
  kCheckCrossOracle = 1U << 1,  // pairwise stable intersections == non-triangular cells
  kCheckTiling = 1U << 2,       // tiling and regularity against the product lift
  kCheckCounts = 1U << 3,       // count identities and n <= t <= n(n-1)/2 + n
  kCheckStructure = 1U << 4,    // triangle bounds and determined-face inequalities
  kCheckAll = 0x1F,
};

enum class SweepMode : std::uint8_t { Exhaustive, Random };

struct SweepParams {
  int n = 4;
  SweepMode mode = SweepMode::Exhaustive;
  int grid_size = 4;           // exhaustive: points in [0, grid)²
  std::size_t samples = 1000;  // random
  int coord_range = 10;        // random: points in [-range, range]²
  std::uint64_t seed = 0;      // random
  std::uint32_t checks = kCheckAll;
  /// Exhaustive only: skip configurations that are not the translate touching
  /// both axes. Every predicate is translation invariant.
  bool canonical_translates = false;
  unsigned jobs = 1;
};

/// Throws InvalidArgument / GridTooSmall / RangeTooSmall on bad parameters.
void validate(const SweepParams& params);

/// All n-subsets of the grid × grid integer lattice, in lexicographic order
/// of (sorted) point lists.
class ConfigEnumerator {
 public:
  /// Throws GridTooSmall if grid² < n or grid < 2.
  ConfigEnumerator(int n, int grid_size);

  /// Next configuration, or nullopt when exhausted.
  std::optional<PointConfig> next();
  [[nodiscard]] std::uint64_t total() const { return total_; }

 private:
  int n_;
  int grid_;
  std::vector<int> idx_;
  bool done_ = false;
  std::uint64_t total_ = 0;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// n distinct integer points drawn uniformly (with rejection) from
/// [-range, range]². Throws RangeTooSmall if fewer than n lattice points.
PointConfig random_config(int n, int coord_range, std::mt19937_64& rng);

/// Generator for configuration `index` of a random sweep; independent of how
/// the sweep is sharded.
std::mt19937_64 config_rng(std::uint64_t seed, std::uint64_t index);

struct Violation {
  std::string invariant;
  std::string details;
};

struct ConfigResult {
  std::uint64_t index = 0;
  std::vector<Point2> points;
  Counts counts;
  std::size_t stable_lines = 0;
  bool near_pencil = false;
  bool regular = false;
  std::size_t determined_union = 0;
  std::size_t noncorner_triangles = 0;
  std::vector<Violation> violations;
};

/// Runs the enabled invariant suites on one point configuration (and its
/// dual arrangement). Internal errors become violations.
ConfigResult check_config(const PointConfig& cfg, std::uint32_t checks);

struct RecordedViolation {
  std::uint64_t index = 0;
  std::vector<Point2> points;
  std::string invariant;
  std::string details;
};

struct SweepReport {
  std::uint64_t configs_tested = 0;
  std::vector<RecordedViolation> violations;
  std::map<long, std::uint64_t> histogram;  // b - (n - 3) -> configurations
  std::chrono::duration<double> elapsed{0};

  [[nodiscard]] bool passed() const { return violations.empty(); }
};

/// Runs the sweep. When `jsonl` is given, one JSON object per configuration
/// is written in index order.
SweepReport run_sweep(const SweepParams& params, std::ostream* jsonl = nullptr);

struct SgSearchResult {
  std::vector<PointConfig> witnesses;
  std::uint64_t examined = 0;
  bool budget_exhausted = false;
};

/// Searches the grid for configurations without an ordinary stable line.
/// Throws InvalidArgument unless n is 4 or 5.
SgSearchResult sg_failure_search(int n, int grid_size, std::uint64_t budget,
                                 std::size_t max_witnesses = 1);

/// Worker count from TROPLINES_JOBS, defaulting to 1.
unsigned default_jobs();

}  // namespace troplines
