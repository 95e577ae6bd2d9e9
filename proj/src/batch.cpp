#include "applike/batch.hpp"

#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace applike::batch {

namespace {

template <class T, class F>
std::vector<T> transform_parallel(std::size_t n, F&& f) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      slots[i].emplace(f(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

template <class T, class F>
std::vector<T> transform_serial(std::size_t n, F&& f) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

void require_same_length(std::span<const Record> a, std::span<const Record> b) {
  if (a.size() != b.size())
    throw ArityError("batch::run_zip", b.size(), "input spans differ in length");
}

}  // namespace

std::vector<Record> run_map(const Pipeline1& p, std::span<const Record> inputs) {
  return transform_parallel<Record>(inputs.size(),
                                    [&](std::size_t i) { return applike::run_map(p(inputs[i])); });
}

std::vector<Record> run_map_serial(const Pipeline1& p, std::span<const Record> inputs) {
  return transform_serial<Record>(inputs.size(),
                                  [&](std::size_t i) { return applike::run_map(p(inputs[i])); });
}

std::vector<std::string> run_show(const Pipeline1& p, std::span<const Record> inputs) {
  return transform_parallel<std::string>(
      inputs.size(), [&](std::size_t i) { return applike::run_show(p(inputs[i])); });
}

std::vector<std::string> run_show_serial(const Pipeline1& p, std::span<const Record> inputs) {
  return transform_serial<std::string>(
      inputs.size(), [&](std::size_t i) { return applike::run_show(p(inputs[i])); });
}

std::vector<Record> run_zip(const Pipeline2& p, std::span<const Record> inputs_a,
                            std::span<const Record> inputs_b) {
  require_same_length(inputs_a, inputs_b);
  return transform_parallel<Record>(inputs_a.size(), [&](std::size_t i) {
    return applike::run_zip(p(inputs_a[i], inputs_b[i]));
  });
}

std::vector<Record> run_zip_serial(const Pipeline2& p, std::span<const Record> inputs_a,
                                   std::span<const Record> inputs_b) {
  require_same_length(inputs_a, inputs_b);
  return transform_serial<Record>(inputs_a.size(), [&](std::size_t i) {
    return applike::run_zip(p(inputs_a[i], inputs_b[i]));
  });
}

std::vector<Record> run_map_cps(const scott::CpsPipeline1& p, std::span<const Record> inputs) {
  return transform_parallel<Record>(
      inputs.size(), [&](std::size_t i) { return scott::run_map_cps(p(inputs[i])); });
}

std::vector<Record> run_map_cps_serial(const scott::CpsPipeline1& p,
                                       std::span<const Record> inputs) {
  return transform_serial<Record>(
      inputs.size(), [&](std::size_t i) { return scott::run_map_cps(p(inputs[i])); });
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace applike::batch
