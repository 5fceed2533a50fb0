#include "varloc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "varloc/errors.hpp"
#include "varloc/kernels.hpp"

namespace varloc {

Point2 anchor_mean(const Scenario& s) {
  Point2 sum{};
  for (const auto& a : s.anchors()) sum = sum + a;
  return (1.0 / s.size()) * sum;
}

Estimate select_best(const Scenario& s, const CandidateList& candidates) {
  if (candidates.size() == 0) throw DomainError("no candidates to select from");
  const kernels::AnchorTable table(s);
  std::vector<double> values(candidates.size());
  kernels::objective_batch(table, candidates.points, values);

  // First minimum in candidate order.
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[best]) best = i;
  }
  const CandidateTag& tag = candidates.tags[best];
  return Estimate{candidates.points[best], values[best],
                  Provenance{"rpte", tag.source, tag.first, tag.second, tag.grid_index}};
}

Estimate rpte(const Scenario& s, int G) { return rpte(s, DiscretizeOptions{.grid = G}); }

Estimate rpte(const Scenario& s, const DiscretizeOptions& options) {
  const MajorizerSet phi = build_majorizer(s);
  return select_best(s, discretize(phi, options));
}

BoundingBox default_oracle_box(const Scenario& s) {
  const double B = norm_bound(s, anchor_mean(s));
  return {{-B, -B}, {B, B}};
}

Estimate oracle_grid(const Scenario& s, double h, const OracleOptions& options) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("lattice pitch must be > 0");
  const BoundingBox box = options.bbox.value_or(default_oracle_box(s));
  if (!(box.hi.x >= box.lo.x) || !(box.hi.y >= box.lo.y)) throw DomainError("empty bounding box");

  const double nx_real = std::floor((box.hi.x - box.lo.x) / h) + 1.0;
  const double ny_real = std::floor((box.hi.y - box.lo.y) / h) + 1.0;
  if (nx_real * ny_real > static_cast<double>(options.budget)) {
    throw ResourceError("oracle lattice of " + std::to_string(nx_real * ny_real) +
                        " points exceeds budget " + std::to_string(options.budget));
  }
  const auto nx = static_cast<std::size_t>(nx_real);
  const auto ny = static_cast<std::size_t>(ny_real);

  const kernels::AnchorTable table(s);
  const kernels::ObjectiveKernel kernel = kernels::kernel_for(kernels::active_isa());

  struct RowBest {
    std::size_t col = 0;
    double value = INFINITY;
  };
  std::vector<RowBest> rows(ny);

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(ny, 1)));

  // Rows are split into contiguous blocks; the final reduction scans rows in
  // order, so the result does not depend on the thread count.
  auto work = [&](std::size_t row_begin, std::size_t row_end) {
    std::vector<Point2> line(nx);
    std::vector<double> values(nx);
    for (std::size_t j = row_begin; j < row_end; ++j) {
      const double y = box.lo.y + static_cast<double>(j) * h;
      for (std::size_t i = 0; i < nx; ++i) line[i] = {box.lo.x + static_cast<double>(i) * h, y};
      kernel(table, line, values);
      RowBest best;
      for (std::size_t i = 0; i < nx; ++i) {
        if (values[i] < best.value) best = {i, values[i]};
      }
      rows[j] = best;
    }
  };

  if (threads == 1) {
    work(0, ny);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t block = (ny + threads - 1) / threads;
    for (std::size_t begin = 0; begin < ny; begin += block) {
      pool.emplace_back(work, begin, std::min(ny, begin + block));
    }
  }

  std::size_t best_row = 0;
  for (std::size_t j = 1; j < ny; ++j) {
    if (rows[j].value < rows[best_row].value) best_row = j;
  }
  const std::size_t best_col = rows[best_row].col;
  const Point2 point{box.lo.x + static_cast<double>(best_col) * h,
                     box.lo.y + static_cast<double>(best_row) * h};
  return Estimate{point, rows[best_row].value,
                  Provenance{"oracle", Source::Oracle, static_cast<int>(best_col),
                             static_cast<int>(best_row),
                             static_cast<int>(std::min<std::size_t>(best_row * nx + best_col,
                                                                    INT32_MAX))}};
}

}  // namespace varloc
