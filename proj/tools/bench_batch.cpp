// Times the OpenMP batch runners against their serial references.
//
//   bench_batch [records] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <vector>

#include "applike/batch.hpp"

namespace {

using namespace applike;
using Clock = std::chrono::steady_clock;

template <class F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = Clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::cout << name << ": serial " << serial << " ms, parallel " << parallel << " ms, speedup "
            << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const long n = argc > 1 ? std::strtol(argv[1], nullptr, 10) : 100000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> ints(-1000000, 1000000);
  std::vector<Record> a;
  std::vector<Record> b;
  for (long i = 0; i < n; ++i) {
    a.push_back(to_record(Device{(rng() & 1) != 0, ints(rng), ints(rng)}));
    b.push_back(to_record(Device{(rng() & 1) != 0, ints(rng), ints(rng)}));
  }

  std::cout << n << " records, " << batch::max_threads() << " thread(s), best of " << repeats
            << "\n";

  const Pipeline1 map = map_device_pipeline();
  if (batch::run_map(map, a) != batch::run_map_serial(map, a)) {
    std::cerr << "map: parallel and serial results differ\n";
    return 1;
  }
  report("map", best_ms(repeats, [&] { batch::run_map_serial(map, a); }),
         best_ms(repeats, [&] { batch::run_map(map, a); }));

  const Pipeline1 show = show_pipeline(types::device);
  report("show", best_ms(repeats, [&] { batch::run_show_serial(show, a); }),
         best_ms(repeats, [&] { batch::run_show(show, a); }));

  const Pipeline2 zip = zip_device_pipeline();
  report("zip", best_ms(repeats, [&] { batch::run_zip_serial(zip, a, b); }),
         best_ms(repeats, [&] { batch::run_zip(zip, a, b); }));

  const scott::CpsPipeline1 map_cps = scott::map_device_pipeline_cps();
  report("map (scott)", best_ms(repeats, [&] { batch::run_map_cps_serial(map_cps, a); }),
         best_ms(repeats, [&] { batch::run_map_cps(map_cps, a); }));
  return 0;
}
