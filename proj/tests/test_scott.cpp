#include "doctest.h"

#include <string>
#include <vector>

#include "applike/pipelines.hpp"
#include "applike/scott.hpp"
#include "support/cps_observe.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "support/step_pool.hpp"

using namespace applike;
using namespace applike::scott;
using namespace applike::testing;

namespace {

const Record kExample = to_record(example_device);

}  // namespace

TEST_CASE("curried application") {
  const Term add3 = fn(3, [](std::span<const Term> a) {
    return Term(Value(value_of(a[0]).as_int() + value_of(a[1]).as_int() + value_of(a[2]).as_int()));
  });
  const Term partial = call(add3, {Value(1)});
  CHECK(std::get<Closure>(partial.v).arity() == 2);
  CHECK(value_of(call(partial, {Value(2), Value(3)})) == Value(6));
  CHECK(value_of(call(add3, {Value(1), Value(2), Value(3)})) == Value(6));

  const Term k = fn(1, [](std::span<const Term>) { return identity(); });
  CHECK(value_of(call(k, {Value(0), Value(9)})) == Value(9));

  CHECK_THROWS_AS(call(Term(Value(1)), {Value(2)}), ContinuationShapeError);
  CHECK(value_of(call(Term(Value(1)), std::span<const Term>{})) == Value(1));
}

TEST_CASE("destructured records feed their fields to a continuation") {
  CHECK(observe1(cons_cps(Value(0), destructure_device_cps(example_device)), 3) ==
        debug_string(FieldList::from({debug_string(Accumulator(Value(0))), false, 19, 1})));
  const Benchmark b{Value(10), "a", Value(20), "b"};
  CHECK(observe1(cons_cps(LexemeStack{}, destructure_benchmark_cps(b)), 4) ==
        debug_string(FieldList::from({debug_string(Accumulator(LexemeStack{})), 10, "a", 20, "b"})));
}

TEST_CASE("cons_cps law: consS s ab sa = ab (sa s)") {
  Gen g(41);
  for (int i = 0; i < 200; ++i) {
    const Device d = g.device();
    const Term s = Value(g.any_int());
    const CpsRecord ab = destructure_device_cps(d);
    const Term sa = fn(1, [](std::span<const Term> x) { return call(collector(3), {x[0]}); });
    const Term lhs = call(cons_cps(s, ab), {sa});
    const Term rhs = call(ab, {call(sa, {s})});
    CHECK(std::get<FieldList>(lhs.v) == std::get<FieldList>(rhs.v));
  }
}

TEST_CASE("chop_cps agrees with chop") {
  const auto lists = small_lists(3);
  for (const auto& p : step_pool())
    for (const auto& ra : lists) {
      // a one-record step: fold a and a fixed 1
      const Step1 f = [&p](const Accumulator& s, const Value& a) { return p.step(s, a, Value(1)); };
      const CpsState st = chop_cps(cons_cps(p.seed, cps_list(ra)), f);
      if (ra.empty()) {
        CHECK(observe1(st, 0) != observe1(cons_cps(p.seed, cps_list(ra)), 0));
        continue;
      }
      const auto flat = chop(PipelineState1{p.seed, ra}, f);
      std::vector<Value> expect{Value(debug_string(flat.acc))};
      for (const Value& v : flat.rest.to_vector()) expect.push_back(v);
      REQUIRE(observe1(st, ra.size() - 1) == debug_string(FieldList::from(expect)));
    }
}

TEST_CASE("chop2_cps equals chop2_via_chop_cps and chop2, exhaustively") {
  const auto lists = small_lists(3);
  std::size_t checked = 0;
  for (const auto& p : step_pool()) {
    const Term f = term_step(p.step);
    for (const auto& ra : lists)
      for (const auto& rb : lists) {
        const CpsState seed = cons_cps(cons_cps(p.seed, cps_list(ra)), cps_list(rb));
        const std::string direct = observe2(chop2_cps(seed, f), after(ra), after(rb));
        const std::string via = observe2(chop2_via_chop_cps(seed, f), after(ra), after(rb));
        REQUIRE(direct == via);
        if (!ra.empty() && !rb.empty())
          REQUIRE(direct == flat_observation(chop2(PipelineState2{p.seed, ra, rb}, p.step)));
        ++checked;
      }
  }
  CHECK(checked == step_pool().size() * lists.size() * lists.size());
}

TEST_CASE("show, map and zip pipelines match the LISP track") {
  CHECK(run_show_cps(show_pipeline_cps(types::device)(kExample)) == kShownExample);
  CHECK(to_device(run_map_cps(map_device_pipeline_cps()(kExample))) == kMappedExample);
  CHECK(to_device(run_zip_cps(zip_device_pipeline_cps()(kExample, to_record(kMappedExample)))) ==
        kZippedExample);

  Gen g(42);
  for (int i = 0; i < 200; ++i) {
    const Record d = to_record(g.small_device());
    const Record e = to_record(g.small_device());
    CHECK(run_show_cps(show_pipeline_cps(types::device)(d)) == run_show(show_pipeline(types::device)(d)));
    CHECK(run_map_cps(map_device_pipeline_cps()(d)) == run_map(map_device_pipeline()(d)));
    CHECK(run_zip_cps(zip_device_pipeline_cps()(d, e)) == run_zip(zip_device_pipeline()(d, e)));
    const Record b = to_record(g.benchmark());
    CHECK(run_show_cps(show_pipeline_cps(types::benchmark)(b)) ==
          run_show(show_pipeline(types::benchmark)(b)));
  }
}

TEST_CASE("zip3 over three devices") {
  const TernaryFn any = [](const Value& a, const Value& b, const Value& c) {
    return Value(a.as_bool() || b.as_bool() || c.as_bool());
  };
  const TernaryFn sum = [](const Value& a, const Value& b, const Value& c) {
    return ops::add(ops::add(a, b), c);
  };
  const CpsPipeline3 p = zip3a_cps(
      zip3a_cps(zip3a_cps(depure_zip3_cps(types::device, destructure_cps, destructure_cps,
                                          destructure_cps),
                          any),
                sum),
      sum);
  Gen g(43);
  for (int i = 0; i < 200; ++i) {
    const Device a = g.small_device();
    const Device b = g.small_device();
    const Device c = g.small_device();
    CHECK(to_device(run_zip3_cps(p(to_record(a), to_record(b), to_record(c)))) ==
          zip3_device_oracle(a, b, c));
  }
}

TEST_CASE("mismatched continuations are shape errors") {
  // Two of three fields mapped: the identity continuation gets a surplus field.
  const CpsPipeline1 two =
      mapa_cps(mapa_cps(depure_map_cps(types::device, destructure_cps), ops::negate), ops::identity);
  CHECK_THROWS_AS(run_map_cps(two(kExample)), ContinuationShapeError);

  // Four steps on three fields: the last continuation is left unsaturated.
  const CpsPipeline1 four = mapa_cps(map_device_pipeline_cps(), ops::identity);
  CHECK_THROWS_AS(run_map_cps(four(kExample)), ContinuationShapeError);

  CHECK_THROWS_AS(run_show_cps(map_device_pipeline_cps()(kExample)), ContinuationShapeError);
  CHECK_THROWS_AS(value_of(identity()), ContinuationShapeError);
  CHECK_THROWS_AS(builder_of(Term(Value(1))), ContinuationShapeError);
}
