#include "doctest.h"

#include <array>

#include "applike/plug.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace applike;
using namespace applike::testing;

namespace {

const Record kExample = to_record(example_device);

Renderer tagged(int position) {
  return [position](const Value& v) { return std::to_string(position) + ":" + render_lexeme(v); };
}

Record run_record(const PlugInstance& i, std::initializer_list<Record> in) {
  return std::get<Record>(run_instance(i, std::vector<Record>(in)));
}

std::string run_text(const PlugInstance& i, const Record& r) {
  return std::get<std::string>(run_instance(i, std::vector<Record>{r}));
}

}  // namespace

TEST_CASE("fresh instances have one port per field") {
  CHECK(mapper(types::device).steps_remaining() == 3);
  CHECK(shower(types::benchmark).steps_remaining() == 4);
  CHECK(zipper_cps(types::device).steps_remaining() == 3);
  CHECK(mapper(types::device).piece_kind() == PieceKind::unary_field_function);
  CHECK(shower_cps(types::device).piece_kind() == PieceKind::renderer);
  CHECK(zipper(types::device).piece_kind() == PieceKind::binary_field_function);
  CHECK(zipper(types::device).input_count() == 2);
  CHECK(mapper(types::device).name() == "Mapper<device>");
  CHECK_THROWS_AS(mapper("gadget"), UnknownType);
}

TEST_CASE("plugging decrements the port count without touching the original") {
  const PlugInstance m = mapper(types::device);
  const PlugInstance m1 = m << unary_piece(ops::negate);
  CHECK(m1.steps_remaining() == 2);
  CHECK(m.steps_remaining() == 3);
  const PlugInstance full = m1 << unary_piece(ops::add_const(100)) << unary_piece(ops::add_const(200));
  CHECK(full.steps_remaining() == 0);
  CHECK_THROWS_AS(full << unary_piece(ops::identity), ExhaustedError);
  CHECK_THROWS_AS(run_instance(m1, std::vector<Record>{kExample}), PortsOpenError);
  CHECK(to_device(run_record(full, {kExample})) == kMappedExample);
}

TEST_CASE("pieces of the wrong kind are rejected") {
  CHECK_THROWS_AS(mapper(types::device) << binary_piece(ops::add), PieceKindError);
  CHECK_THROWS_AS(shower(types::device) << unary_piece(ops::negate), PieceKindError);
  CHECK_THROWS_AS(zipper_cps(types::device) << renderer_piece(render_lexeme), PieceKindError);
  CHECK(kind_of(renderer_piece(render_lexeme)) == PieceKind::renderer);
}

TEST_CASE("run_instance checks the input count") {
  const PlugInstance z = zipper(types::device) << binary_piece(ops::logical_and)
                                               << binary_piece(ops::add) << binary_piece(ops::add);
  CHECK_THROWS_AS(run_instance(z, std::vector<Record>{kExample}), ArityError);
  CHECK(to_device(run_record(z, {kExample, to_record(kMappedExample)})) == kZippedExample);
}

TEST_CASE("the i-th piece lands on the i-th field") {
  for (auto family : {PlugFamily::shower, PlugFamily::shower_cps}) {
    PlugInstance s = make_instance(family, types::device);
    for (int i = 0; i < 3; ++i) s = s << renderer_piece(tagged(i));
    CHECK(run_text(s, kExample) == "0:False 1:19 2:1");
  }
  for (auto family : {PlugFamily::mapper, PlugFamily::mapper_cps}) {
    const PlugInstance m = make_instance(family, types::benchmark)
                           << unary_piece(ops::add_const(1)) << unary_piece(ops::identity)
                           << unary_piece(ops::add_const(2)) << unary_piece(ops::identity);
    CHECK(to_benchmark(run_record(m, {to_record(Benchmark{Value(10), "a", Value(20), "b"})})) ==
          Benchmark{Value(11), "a", Value(22), "b"});
  }
}

TEST_CASE("LISP and CPS instances agree") {
  Gen g(51);
  const std::array<UnaryFn, 3> int_fns{ops::identity, ops::add_const(-3), ops::add_const(7)};
  const std::array<BinaryFn, 3> int_bins{ops::add, ops::first, ops::second};
  const std::array<BinaryFn, 4> bool_bins{ops::logical_and, ops::logical_or, ops::first, ops::second};
  for (int i = 0; i < 250; ++i) {
    const Device a = g.small_device();
    const Device b = g.small_device();

    const UnaryFn u0 = g.boolean() ? UnaryFn(ops::negate) : UnaryFn(ops::identity);
    const UnaryFn u1 = int_fns[static_cast<std::size_t>(g.integer(0, 2))];
    const UnaryFn u2 = int_fns[static_cast<std::size_t>(g.integer(0, 2))];
    auto fill_map = [&](PlugFamily f) {
      return make_instance(f, types::device) << unary_piece(u0) << unary_piece(u1) << unary_piece(u2);
    };
    CHECK(run_record(fill_map(PlugFamily::mapper), {to_record(a)}) ==
          run_record(fill_map(PlugFamily::mapper_cps), {to_record(a)}));

    const BinaryFn b0 = bool_bins[static_cast<std::size_t>(g.integer(0, 3))];
    const BinaryFn b1 = int_bins[static_cast<std::size_t>(g.integer(0, 2))];
    const BinaryFn b2 = int_bins[static_cast<std::size_t>(g.integer(0, 2))];
    auto fill_zip = [&](PlugFamily f) {
      return make_instance(f, types::device) << binary_piece(b0) << binary_piece(b1) << binary_piece(b2);
    };
    CHECK(run_record(fill_zip(PlugFamily::zipper), {to_record(a), to_record(b)}) ==
          run_record(fill_zip(PlugFamily::zipper_cps), {to_record(a), to_record(b)}));

    auto fill_show = [&](PlugFamily f) {
      PlugInstance s = make_instance(f, types::benchmark);
      for (int k = 0; k < 4; ++k) s = s << renderer_piece(tagged(k));
      return s;
    };
    const Record bench = to_record(g.benchmark());
    CHECK(run_text(fill_show(PlugFamily::shower), bench) ==
          run_text(fill_show(PlugFamily::shower_cps), bench));
  }
}
