#pragma once

#include <span>
#include <string>
#include <vector>

#include "applike/pipelines.hpp"
#include "applike/scott.hpp"

// Runs one pipeline over many inputs. The parallel versions split the
// inputs across OpenMP threads; the serial versions are the reference the
// tests compare them against. On failure both rethrow the error of the
// lowest failing index, so they fail identically.
namespace applike::batch {

std::vector<Record> run_map(const Pipeline1& p, std::span<const Record> inputs);
std::vector<Record> run_map_serial(const Pipeline1& p, std::span<const Record> inputs);

std::vector<std::string> run_show(const Pipeline1& p, std::span<const Record> inputs);
std::vector<std::string> run_show_serial(const Pipeline1& p, std::span<const Record> inputs);

// Pairs inputs_a[i] with inputs_b[i]; the spans must have equal length.
std::vector<Record> run_zip(const Pipeline2& p, std::span<const Record> inputs_a,
                            std::span<const Record> inputs_b);
std::vector<Record> run_zip_serial(const Pipeline2& p, std::span<const Record> inputs_a,
                                   std::span<const Record> inputs_b);

std::vector<Record> run_map_cps(const scott::CpsPipeline1& p, std::span<const Record> inputs);
std::vector<Record> run_map_cps_serial(const scott::CpsPipeline1& p,
                                       std::span<const Record> inputs);

int max_threads() noexcept;

}  // namespace applike::batch
