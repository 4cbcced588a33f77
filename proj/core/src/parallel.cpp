#include "vecbeam/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "vecbeam/errors.hpp"

#ifdef VECBEAM_HAVE_OPENMP
#include <omp.h>
#endif

namespace vecbeam {
namespace {

int default_threads() {
#ifdef VECBEAM_HAVE_OPENMP
  static const int n = omp_get_num_procs();
  return n;
#else
  return 1;
#endif
}

int g_limit = 0;

}  // namespace

void set_thread_limit(int threads) {
  g_limit = threads > 0 ? threads : 0;
#ifdef VECBEAM_HAVE_OPENMP
  omp_set_num_threads(g_limit > 0 ? g_limit : default_threads());
#endif
}

void apply_thread_limit_from_env() {
  const char* env = std::getenv("VECBEAM_THREADS");
  if (env == nullptr || *env == '\0') return;
  const std::string_view text(env);
  int n = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || end != text.data() + text.size() || n < 1) {
    throw ConfigError("VECBEAM_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  set_thread_limit(n);
}

int thread_limit() { return g_limit > 0 ? g_limit : default_threads(); }

}  // namespace vecbeam
