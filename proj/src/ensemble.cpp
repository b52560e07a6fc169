#include "bridgelab/ensemble.hpp"

#include <exception>

#include <omp.h>

#include "bridgelab/errors.hpp"

namespace bridgelab {

namespace {

void check_plan(const ReplicatePlan& plan) {
  if (plan.replicates == 0 || plan.width == 0) throw InvalidArgument("empty replicate plan");
}

}  // namespace

PathEnsemble ReplicateMatrix::slice(std::size_t first, std::vector<double> grid,
                                    std::optional<double> scale_hint, bool folded) const {
  const std::size_t k = grid.size();
  if (first + k > cols) throw InvalidArgument("ensemble slice outside replicate row");
  std::vector<double> values(rows * k);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < k; ++j) values[r * k + j] = data[r * cols + first + j];
  return {std::move(grid), rows, std::move(values), scale_hint, folded};
}

ReplicateMatrix run_replicates_serial(const ReplicatePlan& plan, const ReplicateKernel& kernel) {
  check_plan(plan);
  ReplicateMatrix out{plan.replicates, plan.width, std::vector<double>(plan.replicates * plan.width)};
  for (std::size_t r = 0; r < plan.replicates; ++r) {
    RandomStream stream(plan.seed, replicate_stream_id(plan.scenario_tag, r));
    kernel(stream, r, std::span<double>(out.data.data() + r * plan.width, plan.width));
  }
  return out;
}

ReplicateMatrix run_replicates_parallel(const ReplicatePlan& plan, const ReplicateKernel& kernel,
                                        int workers) {
  check_plan(plan);
  ReplicateMatrix out{plan.replicates, plan.width, std::vector<double>(plan.replicates * plan.width)};
  std::vector<std::exception_ptr> errors(plan.replicates);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto count = static_cast<long>(plan.replicates);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    const auto r = static_cast<std::size_t>(i);
    try {
      RandomStream stream(plan.seed, replicate_stream_id(plan.scenario_tag, r));
      kernel(stream, r, std::span<double>(out.data.data() + r * plan.width, plan.width));
    } catch (...) {
      errors[r] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace bridgelab
