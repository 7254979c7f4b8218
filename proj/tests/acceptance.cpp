// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "troplines/incidence.hpp"
#include "troplines/sweep.hpp"

using namespace troplines;

namespace {

using Clock = std::chrono::steady_clock;

Point2 P(long x, long y) { return {Rational(x), Rational(y)}; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > limit_s) {
    out.pass = false;
    out.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  failures += out.pass ? 0 : 1;
  std::printf("%s  %d  %-34s %8.2f s  %s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
              out.detail.c_str());
  std::fflush(stdout);
}

Outcome four_point_near_pencil() {
  const PointConfig cfg({P(0, 0), P(0, -2), P(-2, 0), P(2, 2)});
  const auto lines = stable_lines_through(cfg);
  const Arrangement arr = dualize_points(cfg);
  const auto sub = dual_subdivision(arr);

  std::set<Point2> pairwise;
  for (std::size_t a = 0; a < arr.size(); ++a) {
    for (std::size_t b = a + 1; b < arr.size(); ++b) {
      pairwise.insert(pairwise_stable_intersection(arr[a], arr[b]).point);
    }
  }
  int corners = 0;
  int six = 0;
  std::int64_t twice_area = 0;
  for (const auto& c : sub.cells) {
    corners += is_corner_triangle(c, sub.n);
    six += c.vertices.size() == 6 && is_nonuniform(c.cls);
    twice_area += c.twice_area();
  }
  const auto verdict = dbe_check(cfg);
  const bool ok = lines.size() == 1 && lines[0].line.vertex() == P(0, 0) &&
                  lines[0].incident == std::vector<std::size_t>{0, 1, 2, 3} &&
                  pairwise.size() == 1 && sub.cells.size() == 4 && corners == 3 && six == 1 &&
                  twice_area == 16 && is_near_pencil(sub) && verdict.equality &&
                  verdict.consistent;
  std::ostringstream d;
  d << "b=" << lines.size() << " pairwise=" << pairwise.size() << " cells=" << sub.cells.size()
    << " corners=" << corners << " area=" << twice_area << "/2";
  return {ok, d.str()};
}

Outcome exhaustive_n4() {
  SweepParams p;
  p.n = 4;
  p.grid_size = 4;
  p.checks = kCheckDbe;
  p.jobs = default_jobs();
  const auto r = run_sweep(p);
  std::ostringstream d;
  d << r.configs_tested << " configs, " << r.violations.size() << " violations";
  return {r.configs_tested == 1820 && r.passed(), d.str()};
}

// Shared corpus for the cross-oracle, regularity and structural criteria.
struct Corpus {
  std::uint64_t configs = 0;
  std::map<std::string, std::uint64_t> violations;
  double seconds = 0;
};

Corpus run_corpus() {
  Corpus corpus;
  const auto start = Clock::now();
  std::vector<SweepParams> runs;
  SweepParams ex;
  ex.n = 4;
  ex.grid_size = 4;
  runs.push_back(ex);
  for (int n : {5, 6, 7}) {
    SweepParams rnd;
    rnd.n = n;
    rnd.mode = SweepMode::Random;
    rnd.samples = 10000;
    rnd.coord_range = 10;
    rnd.seed = static_cast<std::uint64_t>(n);
    runs.push_back(rnd);
  }
  for (auto& p : runs) {
    p.checks = kCheckAll;
    p.jobs = default_jobs();
    const auto r = run_sweep(p);
    corpus.configs += r.configs_tested;
    for (const auto& v : r.violations) ++corpus.violations[v.invariant];
  }
  corpus.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return corpus;
}

Outcome corpus_outcome(const Corpus& c, std::initializer_list<const char*> invariants) {
  std::uint64_t bad = 0;
  std::ostringstream d;
  d << c.configs << " configs";
  for (const char* inv : invariants) {
    const auto it = c.violations.find(inv);
    const std::uint64_t k = it == c.violations.end() ? 0 : it->second;
    bad += k;
    d << ", " << inv << "=" << k;
  }
  return {bad == 0 && c.configs == 1820 + 30000, d.str()};
}

Outcome cramer_duality() {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<long> coord(-20, 20);
  std::uniform_int_distribution<long> step(1, 12);
  std::uint64_t mismatches = 0;
  std::map<int, int> by_mode;
  int tested = 0;
  while (tested < 10000) {
    const int mode = tested % 4;  // 0 W, 1 S, 2 NE, 3 free
    const Point2 a = P(coord(rng), coord(rng));
    const long s = step(rng);
    Point2 b;
    switch (mode) {
      case 0: b = {a.x - s, a.y}; break;
      case 1: b = {a.x, a.y - s}; break;
      case 2: b = {a.x + s, a.y + s}; break;
      default: b = P(coord(rng), coord(rng)); break;
    }
    if (a == b) continue;
    const auto cramer = stable_line_two_points(a, b);
    const auto dual = stable_lines_through(PointConfig({a, b}));
    if (dual.size() != 1 || !(dual[0].line == cramer)) ++mismatches;
    ++by_mode[mode];
    ++tested;
  }
  const auto worked = stable_line_two_points(P(-3, 2), P(-1, 2));
  const auto coeffs = stable_line_coefficients(P(-3, 2), P(-1, 2));
  const bool worked_ok = worked.vertex() == P(-1, 2) &&
                         coeffs == TropTriple{TropScalar(2), TropScalar(-1), TropScalar(1)};
  std::ostringstream d;
  d << tested << " pairs (W " << by_mode[0] << ", S " << by_mode[1] << ", NE " << by_mode[2]
    << "), mismatches=" << mismatches << ", worked instance " << (worked_ok ? "ok" : "wrong");
  return {mismatches == 0 && worked_ok, d.str()};
}

Outcome sg_witnesses() {
  const auto four = sg_failure_search(4, 6, 58905);
  const auto five = sg_failure_search(5, 6, 376992);
  std::ostringstream d;
  auto show = [&d](const SgSearchResult& r) {
    if (r.witnesses.empty()) {
      d << "none";
      return;
    }
    for (const auto& p : r.witnesses[0].points()) d << p.to_string();
  };
  d << "n=4 ";
  show(four);
  d << " n=5 ";
  show(five);
  return {!four.witnesses.empty() && !five.witnesses.empty(), d.str()};
}

Outcome determinism() {
  SweepParams p;
  p.n = 6;
  p.mode = SweepMode::Random;
  p.samples = 2000;
  p.coord_range = 15;
  p.seed = 7;
  p.jobs = default_jobs();
  std::ostringstream first;
  std::ostringstream second;
  (void)run_sweep(p, &first);
  p.jobs = p.jobs + 1;
  (void)run_sweep(p, &second);
  const bool same = !first.str().empty() && first.str() == second.str();
  return {same, std::to_string(first.str().size()) + " bytes, " +
                    (same ? "identical" : "streams differ")};
}

}  // namespace

int main() {
  report(1, "four-point near-pencil", 1.0, four_point_near_pencil);
  report(2, "n=4 exhaustive de Bruijn-Erdos", 60.0, exhaustive_n4);

  Corpus corpus;
  report(3, "cross-oracle equivalence", 600.0, [&corpus] {
    corpus = run_corpus();
    return corpus_outcome(corpus, {"cross_oracle", "duality_count"});
  });
  report(4, "regularity oracle", 600.0,
         [&corpus] { return corpus_outcome(corpus, {"regularity", "tiling"}); });
  report(5, "Cramer/duality equivalence", 600.0, cramer_duality);
  report(6, "structural property suites", 600.0, [&corpus] {
    return corpus_outcome(corpus, {"max_triangles", "interior_triangle_determines",
                                   "boundary_triangle_determines", "determined_union", "counts",
                                   "unit_parallelogram", "dbe_bound", "dbe_near_pencil",
                                   "sharp_corners", "internal_error"});
  });
  report(7, "Sylvester-Gallai failure witnesses", 60.0, sg_witnesses);
  report(8, "deterministic JSONL", 600.0, determinism);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
