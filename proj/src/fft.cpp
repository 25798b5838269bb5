#include "choq/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace choq::fft {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex g_mutex;
std::map<std::pair<int, int>, PlanPair> g_plans;  // (dim, points) -> plans

// Plans are created once per shape on an fftw_malloc'd scratch buffer and
// executed on caller arrays via fftw_execute_dft. FFTW_ESTIMATE keeps
// planning deterministic and leaves the scratch untouched.
PlanPair& plans_for(int dim, int points) {
  std::lock_guard<std::mutex> lk(g_mutex);
  auto key = std::make_pair(dim, points);
  auto it = g_plans.find(key);
  if (it != g_plans.end()) return it->second;

  std::size_t n = 1;
  for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(points);
  fftw_complex* buf = fftw_alloc_complex(n);
  int dims[3] = {points, points, points};
  // FFTW_UNALIGNED: plans must run on std::vector storage of any alignment.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair pp;
  pp.fwd = fftw_plan_dft(dim, dims, buf, buf, FFTW_FORWARD, flags);
  pp.bwd = fftw_plan_dft(dim, dims, buf, buf, FFTW_BACKWARD, flags);
  fftw_free(buf);
  return g_plans.emplace(key, pp).first->second;
}

void execute(int dim, int points, cvec& inout, bool forward_dir) {
  PlanPair& pp = plans_for(dim, points);
  auto* data = reinterpret_cast<fftw_complex*>(inout.data());
  fftw_execute_dft(forward_dir ? pp.fwd : pp.bwd, data, data);
}

}  // namespace

void forward(const Grid& g, cvec& inout) { execute(g.dim, g.points_per_dim, inout, true); }
void backward(const Grid& g, cvec& inout) { execute(g.dim, g.points_per_dim, inout, false); }
void forward_cube(int dim, int points, cvec& inout) { execute(dim, points, inout, true); }
void backward_cube(int dim, int points, cvec& inout) { execute(dim, points, inout, false); }

}  // namespace choq::fft
