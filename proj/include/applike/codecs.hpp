#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "applike/hetero_core.hpp"

namespace applike {

// ---------------------------------------------------------------------------
// Applicative parsers
// ---------------------------------------------------------------------------

/// Space-separated lexemes; `cursor` is the next unconsumed one.
struct LexemeStream {
  std::vector<std::string> lexemes;
  std::size_t cursor = 0;
};

// Splits on single spaces, so an empty Str field becomes an empty lexeme.
// An empty line has no lexemes at all.
LexemeStream tokenize(std::string_view line);

template <class T>
struct ParseOk {
  T value;
  std::size_t cursor;
};

struct ParseErr {
  CodecErrc code;
  std::string message;
  std::size_t position;
};

template <class T>
using ParserResult = std::variant<ParseOk<T>, ParseErr>;

/// A parser is a function from (input, cursor) to a value and a new cursor.
/// `Input` is the token source: lexemes, bytes, or a decoded JSON object.
template <class T, class Input = LexemeStream>
class Parser {
 public:
  using value_type = T;
  using input_type = Input;
  using Fn = std::function<ParserResult<T>(const Input&, std::size_t)>;

  explicit Parser(Fn fn) : fn_(std::move(fn)) {}

  ParserResult<T> run(const Input& in, std::size_t cursor = 0) const { return fn_(in, cursor); }

 private:
  Fn fn_;
};

/// pure: consumes nothing.
template <class Input = LexemeStream, class T>
Parser<T, Input> p_pure(T v) {
  return Parser<T, Input>([v = std::move(v)](const Input&, std::size_t cursor) -> ParserResult<T> {
    return ParseOk<T>{v, cursor};
  });
}

namespace detail {

inline Builder apply_step(const Builder& b, const Value& v) { return apply_field(b, v); }

template <class F, class A>
auto apply_step(const F& f, const A& a) -> decltype(f(a)) {
  return f(a);
}

}  // namespace detail

/// <*>: runs `pf` then `pa` and applies the first result to the second.
/// A Builder on the left is fed the value as its next field.
template <class F, class A, class Input>
auto p_ap(Parser<F, Input> pf, Parser<A, Input> pa) {
  using R = std::decay_t<decltype(detail::apply_step(std::declval<const F&>(), std::declval<const A&>()))>;
  return Parser<R, Input>([pf = std::move(pf), pa = std::move(pa)](
                              const Input& in, std::size_t cursor) -> ParserResult<R> {
    auto rf = pf.run(in, cursor);
    if (auto* e = std::get_if<ParseErr>(&rf)) return *e;
    auto& f = std::get<ParseOk<F>>(rf);
    auto ra = pa.run(in, f.cursor);
    if (auto* e = std::get_if<ParseErr>(&ra)) return *e;
    auto& a = std::get<ParseOk<A>>(ra);
    try {
      return ParseOk<R>{detail::apply_step(f.value, a.value), a.cursor};
    } catch (const Error& ex) {
      return ParseErr{CodecErrc::wrong_value_kind, ex.what(), f.cursor};
    }
  });
}

// One lexeme each. p_bool takes exactly False/True; p_int takes a minimal
// decimal within 64-bit range; p_str takes anything.
Parser<Value> p_bool();
Parser<Value> p_int();
Parser<Value> p_str();
Parser<Value> p_real();
Parser<Value> p_field(FieldKind kind);

// pure (builder_new type) <*> p_field k₀ <*> … ; not strict on its own.
Parser<Builder> record_parser(std::string_view type);

// Strict: every lexeme must be consumed. Throws CodecError.
Record parse_record(const LexemeStream& s, std::string_view type);
Record parse_record(std::string_view line, std::string_view type);

// ---------------------------------------------------------------------------
// Binary codec
//
// Bool: 1 byte 0x00/0x01. Int: 8 bytes little-endian two's complement.
// Str: u32 little-endian byte length, then UTF-8 bytes. Real: unsupported.
// ---------------------------------------------------------------------------

using Bytes = std::vector<std::uint8_t>;

bool valid_utf8(std::string_view s) noexcept;

Parser<Value, Bytes> get_field(FieldKind kind);

Bytes encode_binary(const Record& r);
// Strict: every byte must be consumed. Throws CodecError.
Record decode_binary(const Bytes& img, std::string_view type);

std::string to_hex(const Bytes& bytes);
// Accepts either case; ignores ASCII whitespace.
Bytes from_hex(std::string_view hex);

// ---------------------------------------------------------------------------
// Named-field codec over a flat JSON subset
// ---------------------------------------------------------------------------

using JsonScalar = std::variant<bool, std::int64_t, double, std::string>;
using JsonObject = std::vector<std::pair<std::string, JsonScalar>>;

// Parses one flat object. Nested values, null, arrays, duplicate keys and
// trailing text are rejected.
JsonObject parse_json_object(std::string_view text);

// Reals always carry a decimal point or exponent.
std::string render_json_real(double d);

std::string to_named(const Record& r);
Record from_named(std::string_view json, std::string_view type);

}  // namespace applike
