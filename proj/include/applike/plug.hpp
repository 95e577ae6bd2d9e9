#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "applike/pipelines.hpp"
#include "applike/scott.hpp"

namespace applike {

/// What an instance accepts in its next port.
enum class PieceKind { unary_field_function, binary_field_function, renderer };

std::string_view to_string(PieceKind kind) noexcept;

using Piece = std::variant<UnaryFn, BinaryFn, Renderer>;

PieceKind kind_of(const Piece& piece) noexcept;

// A string-returning callable converts to both UnaryFn and Renderer, so
// pieces are built through these rather than by implicit conversion.
inline Piece unary_piece(UnaryFn f) { return Piece(std::in_place_index<0>, std::move(f)); }
inline Piece binary_piece(BinaryFn f) { return Piece(std::in_place_index<1>, std::move(f)); }
inline Piece renderer_piece(Renderer f) { return Piece(std::in_place_index<2>, std::move(f)); }

enum class PlugFamily { mapper, mapper_cps, shower, shower_cps, zipper, zipper_cps };

/// A whole-structure handler with open ports. Each plug fills the next port
/// with a piece handler and returns a new instance with one port fewer;
/// the i-th piece always lands on the i-th field.
class PlugInstance {
 public:
  using State = std::variant<Pipeline1, Pipeline2, scott::CpsPipeline1, scott::CpsPipeline2>;

  const std::string& name() const noexcept { return name_; }
  PlugFamily family() const noexcept { return family_; }
  PieceKind piece_kind() const noexcept { return piece_kind_; }
  std::size_t steps_remaining() const noexcept { return steps_remaining_; }
  // Number of input records run_instance expects.
  std::size_t input_count() const noexcept;

  friend PlugInstance plug(const PlugInstance& whole, const Piece& piece);
  friend PlugInstance make_instance(PlugFamily family, std::string_view type);

 private:
  PlugInstance(std::string name, PlugFamily family, PieceKind kind, std::size_t steps, State state)
      : name_(std::move(name)),
        family_(family),
        piece_kind_(kind),
        steps_remaining_(steps),
        state_(std::move(state)) {}

  friend std::variant<Record, std::string> run_instance(const PlugInstance& i,
                                                        std::span<const Record> inputs);

  std::string name_;
  PlugFamily family_;
  PieceKind piece_kind_;
  std::size_t steps_remaining_;
  State state_;
};

// One port per field of `type`. Throws UnknownType.
PlugInstance make_instance(PlugFamily family, std::string_view type);

inline PlugInstance mapper(std::string_view type) { return make_instance(PlugFamily::mapper, type); }
inline PlugInstance mapper_cps(std::string_view type) {
  return make_instance(PlugFamily::mapper_cps, type);
}
inline PlugInstance shower(std::string_view type) { return make_instance(PlugFamily::shower, type); }
inline PlugInstance shower_cps(std::string_view type) {
  return make_instance(PlugFamily::shower_cps, type);
}
inline PlugInstance zipper(std::string_view type) { return make_instance(PlugFamily::zipper, type); }
inline PlugInstance zipper_cps(std::string_view type) {
  return make_instance(PlugFamily::zipper_cps, type);
}

// Throws ExhaustedError when no port is left, PieceKindError when the piece
// does not fit the port.
PlugInstance plug(const PlugInstance& whole, const Piece& piece);

// Throws PortsOpenError while ports remain, ArityError on a wrong input count.
std::variant<Record, std::string> run_instance(const PlugInstance& i, std::span<const Record> inputs);

inline PlugInstance operator<<(const PlugInstance& whole, const Piece& piece) {
  return plug(whole, piece);
}

}  // namespace applike
