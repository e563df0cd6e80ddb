#ifndef QG_EXEC_HPP
#define QG_EXEC_HPP

#include <cstdint>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qg {

// Execution policy for the data-parallel kernels. Every kernel computes a
// per-index value independently and is reduced serially in index order, so
// both modes produce bit-identical results; the serial mode is the reference
// implementation the tests compare against.
enum class ExecMode { serial, openmp };

struct Exec {
  ExecMode mode = ExecMode::openmp;
  int threads = 0; // 0 = runtime default

  static Exec serial() { return Exec{ExecMode::serial, 1}; }
  static Exec openmp(int threads = 0) { return Exec{ExecMode::openmp, threads}; }
};

// out[i] = f(i) for i in [0,n). f must not touch shared mutable state.
// Exceptions are captured and rethrown after the parallel region joins (the
// one at the lowest index, so failures are deterministic too).
template <class T, class F>
void fill_indexed(const Exec& exec, std::vector<T>& out, std::int64_t n, F&& f) {
  out.resize(static_cast<std::size_t>(n));
#ifdef _OPENMP
  if (exec.mode == ExecMode::openmp) {
    const int requested = exec.threads;
    std::mutex error_mutex;
    std::exception_ptr error;
    std::int64_t error_index = -1;
#pragma omp parallel for schedule(dynamic, 1) num_threads(requested > 0 ? requested : omp_get_max_threads())
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = f(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (error_index < 0 || i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
}

} // namespace qg

#endif
