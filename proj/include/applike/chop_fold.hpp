#pragma once

#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "applike/hetero_core.hpp"

namespace applike {

/// Pretty-printer accumulator; `lexemes.front()` is the most recent push.
struct LexemeStack {
  std::vector<std::string> lexemes;

  LexemeStack pushed(std::string lexeme) const {
    LexemeStack out;
    out.lexemes.reserve(lexemes.size() + 1);
    out.lexemes.push_back(std::move(lexeme));
    out.lexemes.insert(out.lexemes.end(), lexemes.begin(), lexemes.end());
    return out;
  }

  friend bool operator==(const LexemeStack&, const LexemeStack&) = default;
};

/// What the dynamic pipelines thread through a fold: a plain value, a
/// lexeme stack, or a partially applied constructor.
using Accumulator = std::variant<Value, LexemeStack, Builder>;

std::string debug_string(const Accumulator& acc);

// (acc, rest)
template <class Acc>
struct BasicState1 {
  Acc acc;
  FieldList rest;

  friend bool operator==(const BasicState1&, const BasicState1&) = default;
};

// (acc, rest_a, rest_b)
template <class Acc>
struct BasicState2 {
  Acc acc;
  FieldList rest_a;
  FieldList rest_b;

  friend bool operator==(const BasicState2&, const BasicState2&) = default;
};

// (acc, rest_a, rest_b, rest_c)
template <class Acc>
struct BasicState3 {
  Acc acc;
  FieldList rest_a;
  FieldList rest_b;
  FieldList rest_c;

  friend bool operator==(const BasicState3&, const BasicState3&) = default;
};

// ((acc, rest_a), rest_b): the left-consed shape that chop2_left works on.
template <class Acc>
struct BasicLeftState2 {
  BasicState1<Acc> inner;
  FieldList rest_b;

  friend bool operator==(const BasicLeftState2&, const BasicLeftState2&) = default;
};

using PipelineState1 = BasicState1<Accumulator>;
using PipelineState2 = BasicState2<Accumulator>;
using PipelineState3 = BasicState3<Accumulator>;
using LeftState2 = BasicLeftState2<Accumulator>;

using Step1 = std::function<Accumulator(const Accumulator&, const Value&)>;
using Step2 = std::function<Accumulator(const Accumulator&, const Value&, const Value&)>;
using Step3 = std::function<Accumulator(const Accumulator&, const Value&, const Value&, const Value&)>;

namespace detail {

inline void require_fields(const char* op, const FieldList& rest) {
  if (rest.empty()) throw ArityError(op, 0, "no field left to consume");
}

}  // namespace detail

/// chop (s, (a, b)) f = (f s a, b)
template <class Acc, class F>
auto chop(const BasicState1<Acc>& st, F&& f)
    -> BasicState1<std::decay_t<std::invoke_result_t<F, const Acc&, const Value&>>> {
  detail::require_fields("chop", st.rest);
  return {std::invoke(std::forward<F>(f), st.acc, st.rest.head()), st.rest.tail()};
}

/// chop2 (s, (a, b), (c, d)) f = (f s a c, b, d)
template <class Acc, class F>
auto chop2(const BasicState2<Acc>& st, F&& f)
    -> BasicState2<std::decay_t<std::invoke_result_t<F, const Acc&, const Value&, const Value&>>> {
  detail::require_fields("chop2", st.rest_a);
  detail::require_fields("chop2", st.rest_b);
  return {std::invoke(std::forward<F>(f), st.acc, st.rest_a.head(), st.rest_b.head()),
          st.rest_a.tail(), st.rest_b.tail()};
}

/// Left-consed two-list chop, built from chop alone:
/// chop2_left ((s, (a, b)), (c, d)) f = (chop (s, (a, b)) (λs a. f s a c), d)
template <class Acc, class F>
auto chop2_left(const BasicLeftState2<Acc>& st, F&& f)
    -> BasicLeftState2<std::decay_t<std::invoke_result_t<F, const Acc&, const Value&, const Value&>>> {
  detail::require_fields("chop2_left", st.inner.rest);
  detail::require_fields("chop2_left", st.rest_b);
  const Value& c = st.rest_b.head();
  return {chop(st.inner, [&](const Acc& s, const Value& a) { return std::invoke(f, s, a, c); }),
          st.rest_b.tail()};
}

template <class Acc, class F>
auto chop3(const BasicState3<Acc>& st, F&& f)
    -> BasicState3<std::decay_t<
        std::invoke_result_t<F, const Acc&, const Value&, const Value&, const Value&>>> {
  detail::require_fields("chop3", st.rest_a);
  detail::require_fields("chop3", st.rest_b);
  detail::require_fields("chop3", st.rest_c);
  return {std::invoke(std::forward<F>(f), st.acc, st.rest_a.head(), st.rest_b.head(),
                      st.rest_c.head()),
          st.rest_a.tail(), st.rest_b.tail(), st.rest_c.tail()};
}

template <class Acc>
BasicState2<Acc> reassoc(const BasicLeftState2<Acc>& st) {
  return {st.inner.acc, st.inner.rest, st.rest_b};
}

template <class Acc>
BasicLeftState2<Acc> reassoc_left(const BasicState2<Acc>& st) {
  return {{st.acc, st.rest_a}, st.rest_b};
}

/// homWrap chopper o f r = chopper (o r) f
///
/// Lifts a state operator over a reader pipeline so the input record never
/// has to be named. The returned callable forwards any number of inputs to
/// `pipeline`, so it also serves the two-input case.
template <class Chopper, class Pipeline, class F>
auto hom_wrap(Chopper chopper, Pipeline pipeline, F f) {
  return [chopper = std::move(chopper), pipeline = std::move(pipeline),
          f = std::move(f)](const auto&... inputs) { return chopper(pipeline(inputs...), f); };
}

/// homWrap0 chopper o r = chopper (o r)
template <class Chopper, class Pipeline>
auto hom_wrap0(Chopper chopper, Pipeline pipeline) {
  return [chopper = std::move(chopper), pipeline = std::move(pipeline)](const auto&... inputs) {
    return chopper(pipeline(inputs...));
  };
}

/// homWrap2 chopper o f ra rb = chopper (o ra rb) f
template <class Chopper, class Pipeline, class F>
auto hom_wrap2(Chopper chopper, Pipeline pipeline, F f) {
  return [chopper = std::move(chopper), pipeline = std::move(pipeline), f = std::move(f)](
             const auto& ra, const auto& rb) { return chopper(pipeline(ra, rb), f); };
}

/// andThen x f = f x
template <class X, class F>
decltype(auto) and_then(X&& x, F&& f) {
  return std::invoke(std::forward<F>(f), std::forward<X>(x));
}

}  // namespace applike
