// Compares the serial reference kernels against the OpenMP versions on a
// representative workload and reports wall times and speedups.
#include <chrono>
#include <cstdio>
#include <vector>

#include "curvefold/examples.hpp"
#include "curvefold/kernels.hpp"
#include "curvefold/strip.hpp"

using namespace curvefold;
namespace chrono = std::chrono;

namespace {

template <class F>
double time_ms(const F& fn, int reps) {
  const auto t0 = chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = chrono::steady_clock::now();
  return chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   results %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, match ? "match" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 4096;
  SpaceCurve c = make_space_example("arctan_curve", {}, n);
  DevelopableStrip f = build_strip(c, [](double u) { return 3.14159265358979 * (u + 10.0) / 24.0; });
  DevelopableStrip g = dual_strip(f);
  StripSampler sf(f), sg(g);

  std::vector<Vec3> pts;
  for (int i = 0; i < f.size(); i += 4)
    for (double v : {-f.width, -0.5 * f.width, 0.0, 0.5 * f.width, f.width})
      pts.push_back(f.crease.point[i] + v * f.xi[i]);
  std::printf("workload: n = %d rulings, %zu test points\n", n, pts.size());

  {
    double rs = 0.0, rp = 0.0;
    const double ts = time_ms(
        [&] { rs = kernels::max_distance_to_strip_serial(pts, sg, -g.width, g.width, -1.0); }, 3);
    const double tp = time_ms(
        [&] { rp = kernels::max_distance_to_strip(pts, sg, -g.width, g.width, -1.0); }, 3);
    report("max_distance_to_strip", ts, tp, rs == rp);
  }
  {
    kernels::ClearanceResult rs, rp;
    const double tube = 1e-4 * f.length();
    const double ts = time_ms(
        [&] {
          rs = kernels::band_clearance_serial(sf, sg, -f.width, f.width, -g.width, g.width, tube);
        },
        1);
    const double tp = time_ms(
        [&] { rp = kernels::band_clearance(sf, sg, -f.width, f.width, -g.width, g.width, tube); },
        1);
    report("band_clearance", ts, tp, rs.min_distance == rp.min_distance);
  }
  {
    StripMesh mesh = sample_mesh(f, 17);
    double rs = 0.0, rp = 0.0;
    const double ts = time_ms([&] { rs = kernels::max_angle_defect_serial(mesh); }, 5);
    const double tp = time_ms([&] { rp = kernels::max_angle_defect(mesh); }, 5);
    report("max_angle_defect", ts, tp, rs == rp);
  }
  return 0;
}
