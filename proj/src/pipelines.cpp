#include "applike/pipelines.hpp"

#include <array>
#include <charconv>

namespace applike {

std::string debug_string(const Accumulator& acc) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, LexemeStack>) {
          std::string out = "[";
          for (std::size_t i = 0; i < a.lexemes.size(); ++i) {
            if (i) out += ", ";
            out += "\"" + a.lexemes[i] + "\"";
          }
          return out + "]";
        } else {
          return debug_string(a);
        }
      },
      acc);
}

std::string render_lexeme(const Value& v) {
  switch (v.kind()) {
    case FieldKind::boolean: return v.as_bool() ? "True" : "False";
    case FieldKind::integer: return std::to_string(v.as_int());
    case FieldKind::string: {
      const std::string& s = v.as_str();
      if (s.find_first_of(" \n") != std::string::npos)
        throw CodecError(CodecErrc::invalid_lexeme, "string field contains a space or newline", 0);
      return s;
    }
    case FieldKind::real: {
      std::array<char, 32> buf{};
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v.as_real());
      return std::string(buf.data(), end);
    }
  }
  return {};
}

namespace {

const LexemeStack& lexemes_of(const Accumulator& acc, const char* op) {
  if (const auto* s = std::get_if<LexemeStack>(&acc)) return *s;
  throw StateError(std::string(op) + ": accumulator is not a lexeme stack");
}

const Builder& builder_of(const Accumulator& acc, const char* op) {
  if (const auto* b = std::get_if<Builder>(&acc)) return *b;
  throw StateError(std::string(op) + ": accumulator is not a builder");
}

void require_nil(const FieldList& rest, const char* op) {
  if (!rest.empty()) throw ArityError(op, rest.size(), "fields left over");
}

}  // namespace

Pipeline1 depure_show(Destructor destruct) {
  return [destruct = std::move(destruct)](const Record& r) {
    return PipelineState1{LexemeStack{}, destruct(r)};
  };
}

Pipeline1 showa(Pipeline1 p, Renderer render) {
  return hom_wrap(
      [](const PipelineState1& st, const Renderer& f) {
        return chop(st, [&](const Accumulator& s, const Value& a) -> Accumulator {
          return lexemes_of(s, "showa").pushed(f(a));
        });
      },
      std::move(p), std::move(render));
}

std::string run_show(const PipelineState1& st) {
  const auto& lexemes = lexemes_of(st.acc, "run_show").lexemes;
  std::string out;
  for (auto it = lexemes.rbegin(); it != lexemes.rend(); ++it) {
    if (it != lexemes.rbegin()) out += ' ';
    out += *it;
  }
  return out;
}

Pipeline1 depure_map(std::string_view target, Destructor destruct) {
  Builder seed = builder_new(target);
  return [seed = std::move(seed), destruct = std::move(destruct)](const Record& r) {
    return PipelineState1{seed, destruct(r)};
  };
}

Pipeline1 mapa(Pipeline1 p, UnaryFn f) {
  return hom_wrap(
      [](const PipelineState1& st, const UnaryFn& g) {
        return chop(st, [&](const Accumulator& s, const Value& a) -> Accumulator {
          return apply_field(builder_of(s, "mapa"), g(a));
        });
      },
      std::move(p), std::move(f));
}

Record run_map(const PipelineState1& st) {
  const Builder& b = builder_of(st.acc, "run_map");
  require_nil(st.rest, "run_map");
  return finish(b);
}

Pipeline2 depure_zip(std::string_view target, Destructor destruct_a, Destructor destruct_b) {
  Builder seed = builder_new(target);
  return [seed = std::move(seed), da = std::move(destruct_a), db = std::move(destruct_b)](
             const Record& ra, const Record& rb) { return PipelineState2{seed, da(ra), db(rb)}; };
}

Pipeline2 zipa(Pipeline2 p, BinaryFn f) {
  return hom_wrap2(
      [](const PipelineState2& st, const BinaryFn& g) {
        return chop2(st, [&](const Accumulator& s, const Value& a, const Value& b) -> Accumulator {
          return apply_field(builder_of(s, "zipa"), g(a, b));
        });
      },
      std::move(p), std::move(f));
}

Record run_zip(const PipelineState2& st) {
  const Builder& b = builder_of(st.acc, "run_zip");
  require_nil(st.rest_a, "run_zip");
  require_nil(st.rest_b, "run_zip");
  return finish(b);
}

Pipeline1 pop(Pipeline1 p) {
  return hom_wrap0(
      [](const PipelineState1& st) {
        if (st.rest.empty()) throw ArityError("pop", 0, "nothing to pop");
        return PipelineState1{st.acc, st.rest.tail()};
      },
      std::move(p));
}

Pipeline1 push(Pipeline1 p, Value v) {
  return hom_wrap(
      [](const PipelineState1& st, const Value& a) {
        return PipelineState1{st.acc, cons(a, st.rest)};
      },
      std::move(p), std::move(v));
}

Pipeline1 dup(Pipeline1 p) {
  return hom_wrap0(
      [](const PipelineState1& st) {
        if (st.rest.empty()) throw ArityError("dup", 0, "nothing to duplicate");
        return PipelineState1{st.acc, cons(st.rest.head(), st.rest)};
      },
      std::move(p));
}

namespace ops {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

Value identity(const Value& v) { return v; }
Value negate(const Value& v) { return !v.as_bool(); }

UnaryFn add_const(std::int64_t k) {
  return [k](const Value& v) -> Value { return checked_add(v.as_int(), k); };
}

Value add(const Value& a, const Value& b) { return checked_add(a.as_int(), b.as_int()); }
Value append(const Value& a, const Value& b) { return a.as_str() + b.as_str(); }
Value logical_and(const Value& a, const Value& b) { return a.as_bool() && b.as_bool(); }
Value logical_or(const Value& a, const Value& b) { return a.as_bool() || b.as_bool(); }
Value first(const Value& a, const Value&) { return a; }
Value second(const Value&, const Value& b) { return b; }

}  // namespace ops

Pipeline1 show_pipeline(std::string_view type) {
  const RecordType& t = lookup_type(type);
  Pipeline1 p = depure_show(destructure);
  for (std::size_t i = 0; i < t.schema.arity(); ++i) p = showa(std::move(p), render_lexeme);
  return p;
}

Pipeline1 map_device_pipeline() {
  return mapa(mapa(mapa(depure_map(types::device, destructure), ops::negate), ops::add_const(100)),
              ops::add_const(200));
}

Pipeline2 zip_device_pipeline() {
  return zipa(zipa(zipa(depure_zip(types::device, destructure, destructure), ops::logical_and),
                   ops::add),
              ops::add);
}

Pipeline1 remap_device_pipeline() {
  Pipeline1 p = depure_map(types::device, destructure);
  p = and_then(std::move(p), pop);
  p = push(std::move(p), true);
  p = mapa(std::move(p), ops::identity);
  p = and_then(std::move(p), pop);
  p = and_then(std::move(p), dup);
  p = mapa(std::move(p), ops::identity);
  p = mapa(std::move(p), ops::identity);
  return p;
}

Benchmark average(std::span<const Benchmark> outputs) {
  if (outputs.empty()) throw EmptyInput("average of an empty list");
  const double len = static_cast<double>(outputs.size());

  const Pipeline2 bappend =
      zipa(zipa(zipa(zipa(depure_zip(types::benchmark, destructure, destructure), ops::add),
                     ops::append),
                ops::add),
           ops::append);

  Record folded = to_record(Benchmark{std::int64_t{0}, "", std::int64_t{0}, ""});
  for (const Benchmark& b : outputs) folded = run_zip(bappend(folded, to_record(b)));

  const UnaryFn avg = [len](const Value& v) -> Value {
    return static_cast<double>(v.as_int()) / len;
  };
  const Pipeline1 bdivide = mapa(
      mapa(mapa(mapa(depure_map(types::benchmark_avg, destructure), avg), ops::identity), avg),
      ops::identity);

  return to_benchmark(run_map(bdivide(folded)));
}

}  // namespace applike
