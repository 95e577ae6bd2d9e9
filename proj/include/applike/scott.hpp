#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "applike/chop_fold.hpp"
#include "applike/hetero_core.hpp"
#include "applike/pipelines.hpp"

namespace applike::scott {

struct Term;

/// A curried function value of fixed arity. Applying fewer arguments than
/// the arity yields a partial application; applying more calls the body and
/// applies the result to the surplus.
class Closure {
 public:
  using Body = std::function<Term(std::span<const Term>)>;

  Closure(std::size_t arity, Body body);

  std::size_t arity() const noexcept { return arity_ - bound_.size(); }

  friend Term call(const Term& f, std::span<const Term> args);

 private:
  std::size_t arity_;
  std::shared_ptr<const Body> body_;
  std::vector<Term> bound_;
};

/// Everything a Scott-encoded pipeline can pass around: field values,
/// accumulators, a collected field list, or a function.
struct Term {
  std::variant<Value, LexemeStack, Builder, FieldList, Closure> v;

  Term(Value x) : v(std::move(x)) {}
  Term(LexemeStack x) : v(std::move(x)) {}
  Term(Builder x) : v(std::move(x)) {}
  Term(FieldList x) : v(std::move(x)) {}
  Term(Closure x) : v(std::move(x)) {}
  Term(const Accumulator& acc);

  bool is_function() const noexcept { return std::holds_alternative<Closure>(v); }
};

Term call(const Term& f, std::span<const Term> args);
Term call(const Term& f, std::initializer_list<Term> args);

template <class F>
Term fn(std::size_t arity, F&& body) {
  return Closure(arity, Closure::Body(std::forward<F>(body)));
}

Term identity();

// Checked projections; wrong kinds raise ContinuationShapeError.
const Value& value_of(const Term& t);
const LexemeStack& lexemes_of(const Term& t);
const Builder& builder_of(const Term& t);
Accumulator accumulator_of(const Term& t);

/// A record as a function of one continuation: k ↦ k field₀ … fieldₙ₋₁.
using CpsRecord = Term;
/// A seeded or partially chopped pipeline state; same representation.
using CpsState = Term;

CpsRecord destructure_device_cps(const Device& d);
CpsRecord destructure_benchmark_cps(const Benchmark& b);
CpsRecord destructure_cps(const Record& r);

/// consS s ab sa = ab (sa s)
CpsState cons_cps(Term s, CpsState rest);

/// chopS i f o = i (λs a. o (f s a))
///
/// `f` is any Term applied to (s, a); it may return a function, which is
/// how the two- and three-record chops are expressed through this one.
CpsState chop_cps(CpsState i, Term f);
CpsState chop_cps(CpsState i, Step1 f);

/// chop2S i f o = i (λsabc d. o (λtb. sabc (λs a. tb (f s a d))))
CpsState chop2_cps(CpsState i, Term f);
CpsState chop2_cps(CpsState i, Step2 f);

/// chop2_cps rewritten as a single chop_cps (the two are equal pointwise).
CpsState chop2_via_chop_cps(CpsState i, Term f);

/// chop3S i f o = chop2S i (λsabc d g tb. sabc (λs a. tb (f s a d g))) o
CpsState chop3_cps(CpsState i, Term f);
CpsState chop3_cps(CpsState i, Step3 f);

using CpsDestructor = std::function<CpsRecord(const Record&)>;
using CpsPipeline1 = std::function<CpsState(const Record&)>;
using CpsPipeline2 = std::function<CpsState(const Record&, const Record&)>;
using CpsPipeline3 = std::function<CpsState(const Record&, const Record&, const Record&)>;

CpsPipeline1 depure_show_cps(CpsDestructor destruct);
CpsPipeline1 depure_map_cps(std::string_view target, CpsDestructor destruct);
// Left-nested: consS (consS c (f r)) (g s).
CpsPipeline2 depure_zip_cps(std::string_view target, CpsDestructor da, CpsDestructor db);
// consS (consS (consS c (f r)) (g s)) (h t)
CpsPipeline3 depure_zip3_cps(std::string_view target, CpsDestructor da, CpsDestructor db,
                             CpsDestructor dc);

CpsPipeline1 showa_cps(CpsPipeline1 p, Renderer render);
CpsPipeline1 mapa_cps(CpsPipeline1 p, UnaryFn f);
CpsPipeline2 zipa_cps(CpsPipeline2 p, BinaryFn f);
using TernaryFn = std::function<Value(const Value&, const Value&, const Value&)>;
CpsPipeline3 zip3a_cps(CpsPipeline3 p, TernaryFn f);

// runShowS: feed id, then reverse and join.
std::string run_show_cps(const CpsState& st);
// runMapS f = f id
Record run_map_cps(const CpsState& st);
// runZipS f = f id id
Record run_zip_cps(const CpsState& st);
// f id id id
Record run_zip3_cps(const CpsState& st);

CpsPipeline1 show_pipeline_cps(std::string_view type);
CpsPipeline1 map_device_pipeline_cps();
CpsPipeline2 zip_device_pipeline_cps();

}  // namespace applike::scott
