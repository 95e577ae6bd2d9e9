#include "doctest.h"

#include <vector>

#include "applike/batch.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace applike;
using namespace applike::testing;

namespace {

std::vector<Record> devices(Gen& g, int n) {
  std::vector<Record> out;
  for (int i = 0; i < n; ++i) out.push_back(to_record(g.small_device()));
  return out;
}

}  // namespace

TEST_CASE("parallel batches match the serial reference") {
  Gen g(71);
  const auto a = devices(g, 1000);
  const auto b = devices(g, 1000);
  CHECK(batch::run_map(map_device_pipeline(), a) == batch::run_map_serial(map_device_pipeline(), a));
  CHECK(batch::run_show(show_pipeline(types::device), a) ==
        batch::run_show_serial(show_pipeline(types::device), a));
  CHECK(batch::run_zip(zip_device_pipeline(), a, b) ==
        batch::run_zip_serial(zip_device_pipeline(), a, b));
  CHECK(batch::run_map_cps(scott::map_device_pipeline_cps(), a) ==
        batch::run_map_cps_serial(scott::map_device_pipeline_cps(), a));

  const auto mapped = batch::run_map(map_device_pipeline(), a);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(to_device(mapped[i]) == map_device_oracle(to_device(a[i])));
  CHECK(batch::max_threads() >= 1);
}

TEST_CASE("batches fail like the serial reference") {
  Gen g(72);
  auto a = devices(g, 200);
  a[150] = to_record(Device{false, INT64_MAX, 0});
  a[170] = to_record(Device{false, 0, INT64_MAX});
  CHECK_THROWS_AS(batch::run_map(map_device_pipeline(), a), OverflowError);
  CHECK_THROWS_AS(batch::run_map_serial(map_device_pipeline(), a), OverflowError);

  const auto b = devices(g, 3);
  CHECK_THROWS_AS(batch::run_zip(zip_device_pipeline(), a, b), ArityError);
  CHECK(batch::run_map(map_device_pipeline(), std::vector<Record>{}).empty());
}
