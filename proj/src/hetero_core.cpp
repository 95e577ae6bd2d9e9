#include "applike/hetero_core.hpp"

#include <array>
#include <charconv>

namespace applike {

const char* to_string(CodecErrc code) noexcept {
  switch (code) {
    case CodecErrc::exhausted: return "exhausted";
    case CodecErrc::bad_lexeme: return "bad lexeme";
    case CodecErrc::out_of_range: return "out of range";
    case CodecErrc::trailing_input: return "trailing input";
    case CodecErrc::truncated: return "truncated";
    case CodecErrc::invalid_bool: return "invalid bool";
    case CodecErrc::trailing_bytes: return "trailing bytes";
    case CodecErrc::invalid_utf8: return "invalid utf-8";
    case CodecErrc::string_too_long: return "string too long";
    case CodecErrc::unsupported_kind: return "unsupported kind";
    case CodecErrc::invalid_lexeme: return "invalid lexeme";
    case CodecErrc::malformed_json: return "malformed json";
    case CodecErrc::missing_key: return "missing key";
    case CodecErrc::extra_key: return "extra key";
    case CodecErrc::wrong_value_kind: return "wrong value kind";
    case CodecErrc::not_an_object: return "not an object";
    case CodecErrc::invalid_hex: return "invalid hex";
  }
  return "codec error";
}

std::string_view kind_name(FieldKind kind) noexcept {
  switch (kind) {
    case FieldKind::boolean: return "Bool";
    case FieldKind::integer: return "Int";
    case FieldKind::string: return "Str";
    case FieldKind::real: return "Real";
  }
  return "?";
}

namespace {

[[noreturn]] void kind_mismatch(FieldKind want, FieldKind got) {
  throw FieldTypeError("expected " + std::string(kind_name(want)) + ", got " +
                       std::string(kind_name(got)));
}

}  // namespace

bool Value::as_bool() const {
  if (!is_bool()) kind_mismatch(FieldKind::boolean, kind());
  return std::get<bool>(v_);
}

std::int64_t Value::as_int() const {
  if (!is_int()) kind_mismatch(FieldKind::integer, kind());
  return std::get<std::int64_t>(v_);
}

const std::string& Value::as_str() const {
  if (!is_str()) kind_mismatch(FieldKind::string, kind());
  return std::get<std::string>(v_);
}

double Value::as_real() const {
  if (!is_real()) kind_mismatch(FieldKind::real, kind());
  return std::get<double>(v_);
}

std::string debug_string(const Value& v) {
  switch (v.kind()) {
    case FieldKind::boolean: return v.as_bool() ? "true" : "false";
    case FieldKind::integer: return std::to_string(v.as_int());
    case FieldKind::string: return "\"" + v.as_str() + "\"";
    case FieldKind::real: {
      std::array<char, 32> buf{};
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v.as_real());
      return std::string(buf.data(), end);
    }
  }
  return "?";
}

namespace {

const std::array<RecordType, 4>& registry() {
  static const std::array<RecordType, 4> types{{
      {std::string(types::device),
       {{{"block", FieldKind::boolean}, {"major", FieldKind::integer}, {"minor", FieldKind::integer}}}},
      {std::string(types::benchmark),
       {{{"firstApp", FieldKind::integer},
         {"firstLog", FieldKind::string},
         {"secondApp", FieldKind::integer},
         {"secondLog", FieldKind::string}}}},
      {std::string(types::benchmark_avg),
       {{{"firstApp", FieldKind::real},
         {"firstLog", FieldKind::string},
         {"secondApp", FieldKind::real},
         {"secondLog", FieldKind::string}}}},
      {std::string(types::benchmark_argv),
       {{{"firstApp", FieldKind::string},
         {"firstLog", FieldKind::string},
         {"secondApp", FieldKind::string},
         {"secondLog", FieldKind::string}}}},
  }};
  return types;
}

}  // namespace

const RecordType* find_type(std::string_view name) noexcept {
  for (const auto& t : registry())
    if (t.name == name) return &t;
  return nullptr;
}

const RecordType& lookup_type(std::string_view name) {
  if (const auto* t = find_type(name)) return *t;
  throw UnknownType(std::string(name));
}

std::span<const RecordType> registered_types() noexcept { return registry(); }

std::string debug_string(const Record& r) {
  std::string out = r.type + "{";
  for (std::size_t i = 0; i < r.fields.size(); ++i) {
    if (i) out += ", ";
    out += debug_string(r.fields[i]);
  }
  return out + "}";
}

Record to_record(const Device& d) {
  return {std::string(types::device), {d.block, d.major, d.minor}};
}

Record to_record(const Benchmark& b) {
  if (b.first_app.kind() != b.second_app.kind())
    throw FieldTypeError("benchmark apps must share a kind");
  std::string_view type;
  switch (b.first_app.kind()) {
    case FieldKind::integer: type = types::benchmark; break;
    case FieldKind::real: type = types::benchmark_avg; break;
    case FieldKind::string: type = types::benchmark_argv; break;
    case FieldKind::boolean: throw FieldTypeError("benchmark apps cannot be Bool");
  }
  return {std::string(type), {b.first_app, b.first_log, b.second_app, b.second_log}};
}

Device to_device(const Record& r) {
  if (r.type != types::device) throw FieldTypeError("record is " + r.type + ", not device");
  if (r.fields.size() != 3) throw ArityError("to_device", r.fields.size());
  return {r.fields[0].as_bool(), r.fields[1].as_int(), r.fields[2].as_int()};
}

Benchmark to_benchmark(const Record& r) {
  if (r.type != types::benchmark && r.type != types::benchmark_avg && r.type != types::benchmark_argv)
    throw FieldTypeError("record is " + r.type + ", not a benchmark");
  if (r.fields.size() != 4) throw ArityError("to_benchmark", r.fields.size());
  return {r.fields[0], r.fields[1].as_str(), r.fields[2], r.fields[3].as_str()};
}

FieldList FieldList::from(std::span<const Value> values) {
  FieldList out;
  for (auto it = values.rbegin(); it != values.rend(); ++it) out = cons(*it, std::move(out));
  return out;
}

FieldList FieldList::from(std::initializer_list<Value> values) {
  return from(std::span<const Value>(values.begin(), values.size()));
}

std::size_t FieldList::size() const noexcept {
  std::size_t n = 0;
  for (const Node* p = node_.get(); p; p = p->tail.get()) ++n;
  return n;
}

std::vector<Value> FieldList::to_vector() const {
  std::vector<Value> out;
  for (const Node* p = node_.get(); p; p = p->tail.get()) out.push_back(p->head);
  return out;
}

bool operator==(const FieldList& a, const FieldList& b) {
  const FieldList::Node* p = a.node_.get();
  const FieldList::Node* q = b.node_.get();
  for (; p && q; p = p->tail.get(), q = q->tail.get()) {
    if (p == q) return true;  // shared suffix
    if (!(p->head == q->head)) return false;
  }
  return p == q;
}

FieldList cons(Value v, FieldList rest) {
  return FieldList(std::make_shared<const FieldList::Node>(
      FieldList::Node{std::move(v), std::move(rest.node_)}));
}

std::pair<Value, FieldList> uncons(const FieldList& l) {
  if (l.empty()) throw ArityError("uncons", 0, "list is Nil");
  return {l.head(), l.tail()};
}

std::string debug_string(const FieldList& l) {
  std::string out = "[";
  for (const auto& v : l.to_vector()) out += debug_string(v) + ", ";
  return out + "•]";
}

FieldList destructure_device(const Device& d) {
  return cons(d.block, cons(d.major, cons(d.minor, FieldList::nil())));
}

FieldList destructure_benchmark(const Benchmark& b) {
  return cons(b.first_app, cons(b.first_log, cons(b.second_app, cons(b.second_log, FieldList::nil()))));
}

FieldList destructure(const Record& r) { return FieldList::from(r.fields); }

Builder builder_new(std::string_view target, std::size_t arity) {
  const RecordType& t = lookup_type(target);
  if (t.schema.arity() != arity)
    throw ArityError("builder_new", arity,
                     t.name + " has arity " + std::to_string(t.schema.arity()));
  return Builder(&t);
}

Builder builder_new(std::string_view target) { return Builder(&lookup_type(target)); }

Builder apply_field(const Builder& b, Value v) {
  const auto& fields = b.type_->schema.fields;
  if (b.supplied_.size() >= fields.size())
    throw ArityError("apply_field", 0, b.target() + " builder is already full");
  const FieldSpec& next = fields[b.supplied_.size()];
  if (v.kind() != next.kind)
    throw FieldTypeError(b.target() + "." + next.name + ": expected " +
                         std::string(kind_name(next.kind)) + ", got " +
                         std::string(kind_name(v.kind())));
  Builder out = b;
  out.supplied_.push_back(std::move(v));
  return out;
}

Record finish(const Builder& b) {
  if (!b.complete())
    throw ArityError("finish", b.arity() - b.supplied().size(), b.target() + " builder incomplete");
  return {b.target(), b.supplied()};
}

std::string debug_string(const Builder& b) {
  std::string out = "Builder(" + b.target() + ", [";
  for (std::size_t i = 0; i < b.supplied().size(); ++i) {
    if (i) out += ", ";
    out += debug_string(b.supplied()[i]);
  }
  return out + "])";
}

}  // namespace applike
