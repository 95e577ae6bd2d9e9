#include "applike/codecs.hpp"

#include <array>
#include <charconv>
#include <limits>

#include "applike/chop_fold.hpp"
#include "applike/pipelines.hpp"

namespace applike {

namespace {

[[noreturn]] void raise(const ParseErr& e) { throw CodecError(e.code, e.message, e.position); }

template <class T>
const ParseOk<T>& ok_or_throw(const ParserResult<T>& r) {
  if (const auto* e = std::get_if<ParseErr>(&r)) raise(*e);
  return std::get<ParseOk<T>>(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// Lexeme parsers
// ---------------------------------------------------------------------------

LexemeStream tokenize(std::string_view line) {
  LexemeStream out;
  if (line.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t space = line.find(' ', start);
    out.lexemes.emplace_back(line.substr(start, space - start));
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
  return out;
}

namespace {

using LexemeFn = std::function<ParserResult<Value>(const std::string&, std::size_t)>;

Parser<Value> one_lexeme(std::string_view what, LexemeFn convert) {
  return Parser<Value>([what = std::string(what), convert = std::move(convert)](
                           const LexemeStream& in, std::size_t cursor) -> ParserResult<Value> {
    if (cursor >= in.lexemes.size())
      return ParseErr{CodecErrc::exhausted, "expected " + what + ", input exhausted", cursor};
    return convert(in.lexemes[cursor], cursor);
  });
}

// Minimal decimal: optional '-', no leading zeros, no "-0".
bool canonical_int_lexeme(std::string_view s) {
  std::size_t i = s.starts_with('-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  if (s[i] == '0') return s.size() == 1;
  return true;
}

}  // namespace

Parser<Value> p_bool() {
  return one_lexeme("Bool", [](const std::string& s, std::size_t at) -> ParserResult<Value> {
    if (s == "True") return ParseOk<Value>{true, at + 1};
    if (s == "False") return ParseOk<Value>{false, at + 1};
    return ParseErr{CodecErrc::bad_lexeme, "'" + s + "' is not False/True", at};
  });
}

Parser<Value> p_int() {
  return one_lexeme("Int", [](const std::string& s, std::size_t at) -> ParserResult<Value> {
    if (!canonical_int_lexeme(s))
      return ParseErr{CodecErrc::bad_lexeme, "'" + s + "' is not a canonical integer", at};
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range)
      return ParseErr{CodecErrc::out_of_range, "'" + s + "' exceeds 64-bit range", at};
    if (ec != std::errc{} || end != s.data() + s.size())
      return ParseErr{CodecErrc::bad_lexeme, "'" + s + "' is not an integer", at};
    return ParseOk<Value>{v, at + 1};
  });
}

Parser<Value> p_str() {
  return one_lexeme("Str", [](const std::string& s, std::size_t at) -> ParserResult<Value> {
    return ParseOk<Value>{s, at + 1};
  });
}

Parser<Value> p_real() {
  return one_lexeme("Real", [](const std::string& s, std::size_t at) -> ParserResult<Value> {
    double d = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec != std::errc{} || end != s.data() + s.size() || render_lexeme(d) != s)
      return ParseErr{CodecErrc::bad_lexeme, "'" + s + "' is not a canonical real", at};
    return ParseOk<Value>{d, at + 1};
  });
}

Parser<Value> p_field(FieldKind kind) {
  switch (kind) {
    case FieldKind::boolean: return p_bool();
    case FieldKind::integer: return p_int();
    case FieldKind::string: return p_str();
    case FieldKind::real: return p_real();
  }
  return p_str();
}

Parser<Builder> record_parser(std::string_view type) {
  const RecordType& t = lookup_type(type);
  Parser<Builder> chain = p_pure(builder_new(t.name));
  for (const FieldSpec& f : t.schema.fields) chain = p_ap(std::move(chain), p_field(f.kind));
  return chain;
}

Record parse_record(const LexemeStream& s, std::string_view type) {
  const auto result = record_parser(type).run(s, s.cursor);
  const auto& ok = ok_or_throw(result);
  if (ok.cursor != s.lexemes.size())
    throw CodecError(CodecErrc::trailing_input,
                     std::to_string(s.lexemes.size() - ok.cursor) + " lexeme(s) left over",
                     ok.cursor);
  return finish(ok.value);
}

Record parse_record(std::string_view line, std::string_view type) {
  return parse_record(tokenize(line), type);
}

// ---------------------------------------------------------------------------
// Binary codec
// ---------------------------------------------------------------------------

bool valid_utf8(std::string_view s) noexcept {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // overlong forms, surrogates, beyond U+10FFFF
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
      return false;
    i += len;
  }
  return true;
}

namespace {

void put_le(Bytes& out, std::uint64_t v, int width) {
  for (int i = 0; i < width; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(const Bytes& in, std::size_t at, int width) {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(in[at + i]) << (8 * i);
  return v;
}

void put_field(Bytes& out, const Value& v, std::size_t index) {
  switch (v.kind()) {
    case FieldKind::boolean: out.push_back(v.as_bool() ? 1 : 0); break;
    case FieldKind::integer: put_le(out, static_cast<std::uint64_t>(v.as_int()), 8); break;
    case FieldKind::string: {
      const std::string& s = v.as_str();
      if (s.size() > std::numeric_limits<std::uint32_t>::max())
        throw CodecError(CodecErrc::string_too_long, "string longer than 2^32-1 bytes", index);
      put_le(out, s.size(), 4);
      out.insert(out.end(), s.begin(), s.end());
      break;
    }
    case FieldKind::real:
      throw CodecError(CodecErrc::unsupported_kind, "Real fields have no binary encoding", index);
  }
}

void check_fields(const Record& r) {
  const RecordType& t = lookup_type(r.type);
  if (r.fields.size() != t.schema.arity())
    throw ArityError("encode", r.fields.size(), r.type + " has arity " + std::to_string(t.schema.arity()));
  for (std::size_t i = 0; i < r.fields.size(); ++i)
    if (r.fields[i].kind() != t.schema.fields[i].kind)
      throw FieldTypeError(r.type + "." + t.schema.fields[i].name + ": expected " +
                           std::string(kind_name(t.schema.fields[i].kind)));
}

}  // namespace

Parser<Value, Bytes> get_field(FieldKind kind) {
  using R = ParserResult<Value>;
  switch (kind) {
    case FieldKind::boolean:
      return Parser<Value, Bytes>([](const Bytes& in, std::size_t at) -> R {
        if (at + 1 > in.size()) return ParseErr{CodecErrc::truncated, "need 1 byte for Bool", at};
        if (in[at] > 1) return ParseErr{CodecErrc::invalid_bool, "Bool byte must be 0 or 1", at};
        return ParseOk<Value>{in[at] == 1, at + 1};
      });
    case FieldKind::integer:
      return Parser<Value, Bytes>([](const Bytes& in, std::size_t at) -> R {
        if (at + 8 > in.size()) return ParseErr{CodecErrc::truncated, "need 8 bytes for Int", at};
        return ParseOk<Value>{static_cast<std::int64_t>(get_le(in, at, 8)), at + 8};
      });
    case FieldKind::string:
      return Parser<Value, Bytes>([](const Bytes& in, std::size_t at) -> R {
        if (at + 4 > in.size())
          return ParseErr{CodecErrc::truncated, "need 4 bytes for Str length", at};
        const std::uint64_t len = get_le(in, at, 4);
        if (at + 4 + len > in.size())
          return ParseErr{CodecErrc::truncated, "Str body shorter than its length", at};
        std::string s(in.begin() + static_cast<std::ptrdiff_t>(at + 4),
                      in.begin() + static_cast<std::ptrdiff_t>(at + 4 + len));
        if (!valid_utf8(s)) return ParseErr{CodecErrc::invalid_utf8, "Str is not valid UTF-8", at};
        return ParseOk<Value>{std::move(s), at + 4 + static_cast<std::size_t>(len)};
      });
    case FieldKind::real: break;
  }
  return Parser<Value, Bytes>([](const Bytes&, std::size_t at) -> R {
    return ParseErr{CodecErrc::unsupported_kind, "Real fields have no binary encoding", at};
  });
}

Bytes encode_binary(const Record& r) {
  check_fields(r);
  // depure unDevice <**> putCopy <**> ...: one chop per field.
  BasicState1<Bytes> st{{}, destructure(r)};
  for (std::size_t i = 0; !st.rest.empty(); ++i)
    st = chop(st, [i](const Bytes& out, const Value& v) {
      Bytes next = out;
      put_field(next, v, i);
      return next;
    });
  return st.acc;
}

Record decode_binary(const Bytes& img, std::string_view type) {
  const RecordType& t = lookup_type(type);
  Parser<Builder, Bytes> chain = p_pure<Bytes>(builder_new(t.name));
  for (const FieldSpec& f : t.schema.fields) chain = p_ap(std::move(chain), get_field(f.kind));
  const auto result = chain.run(img);
  const auto& ok = ok_or_throw(result);
  if (ok.cursor != img.size())
    throw CodecError(CodecErrc::trailing_bytes,
                     std::to_string(img.size() - ok.cursor) + " byte(s) left over", ok.cursor);
  return finish(ok.value);
}

std::string to_hex(const Bytes& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  Bytes out;
  int high = -1;
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    const int n = nibble(c);
    if (n < 0) throw CodecError(CodecErrc::invalid_hex, "invalid hex digit", i);
    if (high < 0) {
      high = n;
    } else {
      out.push_back(static_cast<std::uint8_t>(high << 4 | n));
      high = -1;
    }
  }
  if (high >= 0) throw CodecError(CodecErrc::invalid_hex, "odd number of hex digits", hex.size());
  return out;
}

// ---------------------------------------------------------------------------
// JSON subset
// ---------------------------------------------------------------------------

namespace {

class JsonReader {
 public:
  explicit JsonReader(std::string_view text) : s_(text) {}

  JsonObject object() {
    skip_ws();
    if (!peek('{')) fail(CodecErrc::not_an_object, "input is not a JSON object");
    ++pos_;
    JsonObject out;
    skip_ws();
    if (peek('}')) {
      ++pos_;
    } else {
      for (;;) {
        skip_ws();
        const std::size_t key_at = pos_;
        std::string key = string();
        for (const auto& [k, v] : out)
          if (k == key) {
            pos_ = key_at;
            fail(CodecErrc::malformed_json, "duplicate key \"" + key + "\"");
          }
        skip_ws();
        expect(':');
        skip_ws();
        out.emplace_back(std::move(key), scalar());
        skip_ws();
        if (peek(',')) {
          ++pos_;
          continue;
        }
        expect('}');
        break;
      }
    }
    skip_ws();
    if (pos_ != s_.size()) fail(CodecErrc::malformed_json, "text after the object");
    return out;
  }

 private:
  [[noreturn]] void fail(CodecErrc code, const std::string& msg) const {
    throw CodecError(code, msg, pos_);
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(CodecErrc::malformed_json, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
      ++pos_;
  }

  std::string string() {
    expect('"');
    std::string out;
    for (;;) {
      if (pos_ >= s_.size()) fail(CodecErrc::malformed_json, "unterminated string");
      const char c = s_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (peek('"') || peek('\\')) {
          out.push_back(s_[pos_++]);
          continue;
        }
        fail(CodecErrc::malformed_json, "only \\\" and \\\\ escapes are supported");
      }
      out.push_back(c);
    }
    if (!valid_utf8(out)) fail(CodecErrc::invalid_utf8, "string is not valid UTF-8");
    return out;
  }

  bool literal(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  JsonScalar scalar() {
    if (peek('"')) return string();
    if (literal("true")) return true;
    if (literal("false")) return false;
    if (peek('{') || peek('[') || peek('n'))
      fail(CodecErrc::malformed_json, "only flat objects of scalars are supported");
    return number();
  }

  JsonScalar number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
      return pos_ - from;
    };
    if (peek('-')) ++pos_;
    const std::size_t int_start = pos_;
    const std::size_t n = digits();
    if (n == 0) fail(CodecErrc::malformed_json, "expected a value");
    if (n > 1 && s_[int_start] == '0') fail(CodecErrc::malformed_json, "leading zero");
    bool real = false;
    if (peek('.')) {
      real = true;
      ++pos_;
      if (digits() == 0) fail(CodecErrc::malformed_json, "digits expected after '.'");
    }
    if (peek('e') || peek('E')) {
      real = true;
      ++pos_;
      if (peek('+') || peek('-')) ++pos_;
      if (digits() == 0) fail(CodecErrc::malformed_json, "digits expected in exponent");
    }
    const char* first = s_.data() + start;
    const char* last = s_.data() + pos_;
    if (real) {
      double d = 0;
      auto [end, ec] = std::from_chars(first, last, d);
      if (ec != std::errc{} || end != last) {
        pos_ = start;
        fail(CodecErrc::out_of_range, "real out of range");
      }
      return d;
    }
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || end != last) {
      pos_ = start;
      fail(CodecErrc::out_of_range, "integer exceeds 64-bit range");
    }
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string json_value(const Value& v) {
  switch (v.kind()) {
    case FieldKind::boolean: return v.as_bool() ? "true" : "false";
    case FieldKind::integer: return std::to_string(v.as_int());
    case FieldKind::string: return quote(v.as_str());
    case FieldKind::real: return render_json_real(v.as_real());
  }
  return {};
}

struct NamedText {
  std::string text;
  std::size_t index = 0;
};

Parser<Value, JsonObject> by_name(const FieldSpec& field) {
  return Parser<Value, JsonObject>([field](const JsonObject& obj,
                                           std::size_t cursor) -> ParserResult<Value> {
    for (const auto& [key, scalar] : obj) {
      if (key != field.name) continue;
      auto wrong = [&] {
        return ParseErr{CodecErrc::wrong_value_kind,
                        "\"" + key + "\" must be " + std::string(kind_name(field.kind)), cursor};
      };
      switch (field.kind) {
        case FieldKind::boolean:
          if (const auto* b = std::get_if<bool>(&scalar)) return ParseOk<Value>{*b, cursor + 1};
          return wrong();
        case FieldKind::integer:
          if (const auto* i = std::get_if<std::int64_t>(&scalar))
            return ParseOk<Value>{*i, cursor + 1};
          return wrong();
        case FieldKind::string:
          if (const auto* s = std::get_if<std::string>(&scalar))
            return ParseOk<Value>{*s, cursor + 1};
          return wrong();
        case FieldKind::real:
          if (const auto* d = std::get_if<double>(&scalar)) return ParseOk<Value>{*d, cursor + 1};
          if (const auto* i = std::get_if<std::int64_t>(&scalar))
            return ParseOk<Value>{static_cast<double>(*i), cursor + 1};
          return wrong();
      }
    }
    return ParseErr{CodecErrc::missing_key, "missing key \"" + field.name + "\"", cursor};
  });
}

}  // namespace

JsonObject parse_json_object(std::string_view text) { return JsonReader(text).object(); }

std::string render_json_real(double d) {
  if (d != d || d == std::numeric_limits<double>::infinity() ||
      d == -std::numeric_limits<double>::infinity())
    throw CodecError(CodecErrc::unsupported_kind, "non-finite real", 0);
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), d);
  std::string out(buf.data(), end);
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

std::string to_named(const Record& r) {
  const RecordType& t = lookup_type(r.type);
  check_fields(r);
  BasicState1<NamedText> st{{"{", 0}, destructure(r)};
  while (!st.rest.empty())
    st = chop(st, [&](const NamedText& acc, const Value& v) {
      NamedText next{acc.text, acc.index + 1};
      if (acc.index) next.text += ',';
      next.text += quote(t.schema.fields[acc.index].name) + ":" + json_value(v);
      return next;
    });
  return st.acc.text + "}";
}

Record from_named(std::string_view json, std::string_view type) {
  const RecordType& t = lookup_type(type);
  const JsonObject obj = parse_json_object(json);
  for (std::size_t i = 0; i < obj.size(); ++i) {
    bool known = false;
    for (const auto& f : t.schema.fields) known = known || f.name == obj[i].first;
    if (!known) throw CodecError(CodecErrc::extra_key, "unexpected key \"" + obj[i].first + "\"", i);
  }
  // pure Device <*> v .: "block" <*> v .: "major" <*> v .: "minor"
  Parser<Builder, JsonObject> chain = p_pure<JsonObject>(builder_new(t.name));
  for (const FieldSpec& f : t.schema.fields) chain = p_ap(std::move(chain), by_name(f));
  return finish(ok_or_throw(chain.run(obj)).value);
}

}  // namespace applike
