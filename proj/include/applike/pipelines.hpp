#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "applike/chop_fold.hpp"
#include "applike/hetero_core.hpp"

namespace applike {

using Destructor = std::function<FieldList(const Record&)>;
using Pipeline1 = std::function<PipelineState1(const Record&)>;
using Pipeline2 = std::function<PipelineState2(const Record&, const Record&)>;

using Renderer = std::function<std::string(const Value&)>;
using UnaryFn = std::function<Value(const Value&)>;
using BinaryFn = std::function<Value(const Value&, const Value&)>;

// Canonical lexeme for a value: False/True, minimal decimal, the string
// itself (must not contain a space or newline), shortest round-trip real.
std::string render_lexeme(const Value& v);

// --- show ---------------------------------------------------------------

Pipeline1 depure_show(Destructor destruct);
Pipeline1 showa(Pipeline1 p, Renderer render);
// Reverses the stack and joins with single spaces.
std::string run_show(const PipelineState1& st);

// --- map ----------------------------------------------------------------

// Throws UnknownType immediately for an unregistered target.
Pipeline1 depure_map(std::string_view target, Destructor destruct);
Pipeline1 mapa(Pipeline1 p, UnaryFn f);
// Strict: the Builder must be complete and no fields may be left over.
Record run_map(const PipelineState1& st);

// --- zip ----------------------------------------------------------------

Pipeline2 depure_zip(std::string_view target, Destructor destruct_a, Destructor destruct_b);
Pipeline2 zipa(Pipeline2 p, BinaryFn f);
Record run_zip(const PipelineState2& st);

// --- stack machine ------------------------------------------------------

Pipeline1 pop(Pipeline1 p);
Pipeline1 push(Pipeline1 p, Value v);
Pipeline1 dup(Pipeline1 p);

// --- field operations used by the demos ----------------------------------

namespace ops {
Value identity(const Value& v);
Value negate(const Value& v);             // Bool not
UnaryFn add_const(std::int64_t k);        // checked Int + k
Value add(const Value& a, const Value& b);  // checked Int + Int
Value append(const Value& a, const Value& b);  // Str ++ Str
Value logical_and(const Value& a, const Value& b);
Value logical_or(const Value& a, const Value& b);
Value first(const Value& a, const Value& b);
Value second(const Value& a, const Value& b);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
}  // namespace ops

// --- ready-made pipelines -------------------------------------------------

// One canonical showa step per field of `type`.
Pipeline1 show_pipeline(std::string_view type);
// not, +100, +200
Pipeline1 map_device_pipeline();
// (&&), (+), (+)
Pipeline2 zip_device_pipeline();
// pop, push True, mapa id, pop, dup, mapa id, mapa id
Pipeline1 remap_device_pipeline();

/// Averages Int-app benchmarks: point-wise sum of apps and concatenation
/// of logs, then apps divided by the count as Real.
///
/// Throws EmptyInput on an empty list and OverflowError if a sum leaves the
/// 64-bit range.
Benchmark average(std::span<const Benchmark> outputs);

}  // namespace applike
