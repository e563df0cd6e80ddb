// Timings of the OpenMP kernels against their serial reference paths, with a
// bit-equality column (both paths reduce in fixed index order).
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qg/conditionality.hpp"
#include "qg/greedy.hpp"
#include "qg/olevskii.hpp"
#include "qg/quadrature.hpp"
#include "qg/rng.hpp"
#include "qg/spaces.hpp"

using namespace qg;

namespace {

double time_once(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void row(const std::string& name, const std::function<void(const Exec&)>& run,
         const std::function<bool()>& equal) {
  // warm up allocators and caches on the serial path
  run(Exec::serial());
  const double serial_ms = time_once([&] { run(Exec::serial()); });
  const double omp_ms = time_once([&] { run(Exec::openmp()); });
  std::printf("%-34s %10.1f ms %10.1f ms   x%-5.2f %s\n", name.c_str(), serial_ms, omp_ms,
              serial_ms / omp_ms, equal() ? "identical" : "DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp\n");
#endif
  std::printf("%-34s %13s %13s   %-6s %s\n", "kernel", "serial", "openmp", "speedup", "check");

  {
    std::vector<double> serial_table, omp_table;
    row(
        "weight table (gamma 0.6, k<=768)",
        [&](const Exec& exec) {
          auto table = weight_coeff_table(0.6, 768, {}, exec);
          if (exec.mode == ExecMode::serial) {
            serial_table = table;
          } else {
            omp_table = table;
          }
        },
        [&] { return serial_table == omp_table; });
  }

  {
    const WeightedTrigBasis trig = gram_from_weighted_trig(0.25, 12);
    KnExact serial_out, omp_out;
    row(
        "k_N exhaustive scan (d 25, N 3)",
        [&](const Exec& exec) {
          auto out = k_n_exact(*trig.basis, 3, 1e6, exec);
          (exec.mode == ExecMode::serial ? serial_out : omp_out) = out;
        },
        [&] { return serial_out.value == omp_out.value && serial_out.argmax == omp_out.argmax; });
  }

  {
    const WeightedTrigBasis trig = gram_from_weighted_trig(0.25, 64);
    SignSearchResult serial_out, omp_out;
    row(
        "sign search (N 64, 4096 trials)",
        [&](const Exec& exec) {
          auto out = sign_partition_witness(trig, 64, 4096, 7, exec);
          (exec.mode == ExecMode::serial ? serial_out : omp_out) = out;
        },
        [&] {
          return serial_out.witness.ratio == omp_out.witness.ratio &&
                 serial_out.mean_sq_norm == omp_out.mean_sq_norm;
        });
  }

  {
    const WeightedTrigBasis trig = gram_from_weighted_trig(0.2, 32);
    GreedyReport serial_out, omp_out;
    row(
        "greedy sampling (d 65, 2000 x)",
        [&](const Exec& exec) {
          auto out = estimate_qg_constant(*trig.basis, QgSampler{}, 2000, 5, exec);
          (exec.mode == ExecMode::serial ? serial_out : omp_out) = out;
        },
        [&] {
          return serial_out.k_hat == omp_out.k_hat && serial_out.kappa_hat == omp_out.kappa_hat;
        });
  }

  {
    const OlevskiiBasis psi = olevskii_basis(canonical_sequence_basis(7, 2.0), 7);
    std::vector<DemocracyRow> serial_out, omp_out;
    row(
        "democracy profile (d 254)",
        [&](const Exec& exec) {
          auto out = democracy_profile(*psi.psi, {4, 16, 64, 127}, 400, 3, exec);
          (exec.mode == ExecMode::serial ? serial_out : omp_out) = out;
        },
        [&] {
          if (serial_out.size() != omp_out.size()) return false;
          for (std::size_t i = 0; i < serial_out.size(); ++i) {
            if (serial_out[i].sup_est != omp_out[i].sup_est) return false;
            if (serial_out[i].inf_est != omp_out[i].inf_est) return false;
          }
          return true;
        });
  }

  {
    const WeightedTrigBasis trig = gram_from_weighted_trig(0.25, 48);
    double serial_max = 0.0, omp_max = 0.0;
    row(
        "sampled projection norms (d 97)",
        [&](const Exec& exec) {
          std::vector<double> values;
          fill_indexed(exec, values, 400, [&](std::int64_t t) {
            Rng rng(derive_seed(3, static_cast<std::uint64_t>(t), 0xB));
            std::vector<int> pool(static_cast<std::size_t>(trig.basis->dim()));
            for (int j = 0; j < trig.basis->dim(); ++j) pool[static_cast<std::size_t>(j)] = j;
            const int size = 1 + static_cast<int>(rng.below(32));
            for (int j = 0; j < size; ++j) {
              const int swap_with =
                  j + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                          trig.basis->dim() - j)));
              std::swap(pool[static_cast<std::size_t>(j)],
                        pool[static_cast<std::size_t>(swap_with)]);
            }
            pool.resize(static_cast<std::size_t>(size));
            return projection_norm(*trig.basis,
                                   SupportSet::from_indices(std::move(pool), trig.basis->dim()))
                .value;
          });
          double best = 0.0;
          for (double value : values) best = std::max(best, value);
          (exec.mode == ExecMode::serial ? serial_max : omp_max) = best;
        },
        [&] { return serial_max == omp_max; });
  }

  return 0;
}
