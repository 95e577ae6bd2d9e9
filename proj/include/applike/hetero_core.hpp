#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "applike/error.hpp"

namespace applike {

enum class FieldKind { boolean, integer, string, real };

std::string_view kind_name(FieldKind kind) noexcept;

/// A single field value: Bool | Int | Str | Real.
///
/// Real only ever comes out of the averaging pipeline; the binary codec
/// refuses it.
class Value {
 public:
  Value() = default;
  Value(bool b) : v_(b) {}
  Value(std::int64_t i) : v_(i) {}
  Value(int i) : v_(static_cast<std::int64_t>(i)) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(double d) : v_(d) {}

  FieldKind kind() const noexcept { return static_cast<FieldKind>(v_.index()); }

  bool is_bool() const noexcept { return kind() == FieldKind::boolean; }
  bool is_int() const noexcept { return kind() == FieldKind::integer; }
  bool is_str() const noexcept { return kind() == FieldKind::string; }
  bool is_real() const noexcept { return kind() == FieldKind::real; }

  // Checked accessors; throw FieldTypeError on a kind mismatch.
  bool as_bool() const;
  std::int64_t as_int() const;
  const std::string& as_str() const;
  double as_real() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  std::variant<bool, std::int64_t, std::string, double> v_{false};
};

// Debug rendering used in diagnostics and test output: strings are quoted.
std::string debug_string(const Value& v);

struct FieldSpec {
  std::string name;
  FieldKind kind;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Ordered (name, kind) list; order equals constructor order.
struct FieldSchema {
  std::vector<FieldSpec> fields;

  std::size_t arity() const noexcept { return fields.size(); }
  friend bool operator==(const FieldSchema&, const FieldSchema&) = default;
};

struct RecordType {
  std::string name;
  FieldSchema schema;
};

// Registry of the single-constructor record types known to the toolkit.
// Each type has exactly one entry; codecs and Builder type checks all read
// the schema from here.
const RecordType& lookup_type(std::string_view name);
const RecordType* find_type(std::string_view name) noexcept;
std::span<const RecordType> registered_types() noexcept;

namespace types {
inline constexpr std::string_view device = "device";
inline constexpr std::string_view benchmark = "benchmark";          // Int apps (Outputs)
inline constexpr std::string_view benchmark_avg = "benchmark_avg";  // Real apps (Avgs)
inline constexpr std::string_view benchmark_argv = "benchmark_argv";  // space-joined argv (Inputs)
}  // namespace types

/// Generic record: a registered type name plus its fields in order.
struct Record {
  std::string type;
  std::vector<Value> fields;

  friend bool operator==(const Record&, const Record&) = default;
};

std::string debug_string(const Record& r);

struct Device {
  bool block = false;
  std::int64_t major = 0;
  std::int64_t minor = 0;

  friend bool operator==(const Device&, const Device&) = default;
};

// Apps are Int (Outputs), Real (Avgs) or Str (Inputs); both apps share a kind.
struct Benchmark {
  Value first_app{std::int64_t{0}};
  std::string first_log;
  Value second_app{std::int64_t{0}};
  std::string second_log;

  friend bool operator==(const Benchmark&, const Benchmark&) = default;
};

inline const Device example_device{false, 19, 1};

Record to_record(const Device& d);
Record to_record(const Benchmark& b);
Device to_device(const Record& r);
Benchmark to_benchmark(const Record& r);

/// LISP-encoded heterogeneous list: nested (head, tail) pairs ending in Nil.
///
/// Nodes are immutable and shared, so cons and tail are O(1) and a list may
/// be handed to any number of threads.
class FieldList {
 public:
  FieldList() = default;  // Nil

  static FieldList nil() { return {}; }
  static FieldList from(std::span<const Value> values);
  static FieldList from(std::initializer_list<Value> values);

  bool empty() const noexcept { return node_ == nullptr; }
  std::size_t size() const noexcept;

  // Precondition: !empty(). Use uncons() for the checked version.
  const Value& head() const { return node_->head; }
  FieldList tail() const { return FieldList(node_->tail); }

  std::vector<Value> to_vector() const;

  friend bool operator==(const FieldList& a, const FieldList& b);
  friend FieldList cons(Value v, FieldList rest);

 private:
  struct Node {
    Value head;
    std::shared_ptr<const Node> tail;
  };
  explicit FieldList(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

FieldList cons(Value v, FieldList rest);

// Throws ArityError("uncons", 0) on Nil.
std::pair<Value, FieldList> uncons(const FieldList& l);

std::string debug_string(const FieldList& l);

FieldList destructure_device(const Device& d);
FieldList destructure_benchmark(const Benchmark& b);
// Works for any registered record.
FieldList destructure(const Record& r);

/// Staged curried constructor: takes one field per apply_field and becomes a
/// record after exactly arity applications.
class Builder {
 public:
  const std::string& target() const noexcept { return type_->name; }
  std::size_t arity() const noexcept { return type_->schema.arity(); }
  const std::vector<Value>& supplied() const noexcept { return supplied_; }
  bool complete() const noexcept { return supplied_.size() == arity(); }

  friend bool operator==(const Builder& a, const Builder& b) {
    return a.type_ == b.type_ && a.supplied_ == b.supplied_;
  }

  friend Builder builder_new(std::string_view target, std::size_t arity);
  friend Builder builder_new(std::string_view target);
  friend Builder apply_field(const Builder& b, Value v);

 private:
  explicit Builder(const RecordType* type) : type_(type) {}

  const RecordType* type_;
  std::vector<Value> supplied_;
};

// Throws UnknownType, or ArityError when `arity` disagrees with the registry.
Builder builder_new(std::string_view target, std::size_t arity);
Builder builder_new(std::string_view target);
// Throws ArityError when full, FieldTypeError when v's kind is not the next
// field's kind.
Builder apply_field(const Builder& b, Value v);
// Throws ArityError unless complete.
Record finish(const Builder& b);

std::string debug_string(const Builder& b);

}  // namespace applike
