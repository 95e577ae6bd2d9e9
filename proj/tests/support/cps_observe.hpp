#pragma once

// Observing Scott-encoded states by feeding them collecting continuations,
// so two states can be compared as plain values.

#include <functional>
#include <string>
#include <vector>

#include "applike/chop_fold.hpp"
#include "applike/scott.hpp"

namespace applike::testing {

using scott::call;
using scott::CpsRecord;
using scott::CpsState;
using scott::fn;
using scott::Term;
using scott::accumulator_of;
using scott::destructure_cps;
using scott::value_of;

// Continuation of arity 1 + n that collects the accumulator (rendered) and
// the n remaining fields into a FieldList.
inline Term collector(std::size_t n) {
  return fn(1 + n, [](std::span<const Term> a) {
    std::vector<Value> out{Value(debug_string(accumulator_of(a[0])))};
    for (const Term& t : a.subspan(1)) out.push_back(value_of(t));
    return Term(FieldList::from(out));
  });
}

inline std::string settle(const std::function<Term()>& run) {
  try {
    const Term t = run();
    if (const auto* l = std::get_if<FieldList>(&t.v)) return debug_string(*l);
    return "unsaturated";
  } catch (const ContinuationShapeError&) {
    return "shape";
  }
}

// Observes a one-record state with n fields left.
inline std::string observe1(const CpsState& st, std::size_t n) {
  return settle([&] { return call(st, {collector(n)}); });
}

// Observes a left-nested two-record state, nb fields left on the outer
// record and na on the inner one.
inline std::string observe2(const CpsState& st, std::size_t na, std::size_t nb) {
  return settle([&] {
    return call(st, {fn(1 + nb, [na](std::span<const Term> a) {
                  const Term inner = call(a[0], {collector(na)});
                  const auto* l = std::get_if<FieldList>(&inner.v);
                  if (!l) throw ContinuationShapeError("inner state unsaturated", 0, 0);
                  std::vector<Value> out = l->to_vector();
                  for (const Term& t : a.subspan(1)) out.push_back(value_of(t));
                  return Term(FieldList::from(out));
                })});
  });
}

inline CpsRecord cps_list(const FieldList& l) {
  return destructure_cps(Record{std::string(types::device), l.to_vector()});
}

inline std::string flat_observation(const PipelineState2& st) {
  std::vector<Value> out{Value(debug_string(st.acc))};
  for (const Value& v : st.rest_a.to_vector()) out.push_back(v);
  for (const Value& v : st.rest_b.to_vector()) out.push_back(v);
  return debug_string(FieldList::from(out));
}

inline Term term_step(const Step2& f) {
  return fn(3, [f](std::span<const Term> a) {
    return Term(f(accumulator_of(a[0]), value_of(a[1]), value_of(a[2])));
  });
}

inline std::size_t after(const FieldList& l) { return l.empty() ? 0 : l.size() - 1; }


}  // namespace applike::testing
