#include "applike/plug.hpp"

namespace applike {

std::string_view to_string(PieceKind kind) noexcept {
  switch (kind) {
    case PieceKind::unary_field_function: return "unary field function";
    case PieceKind::binary_field_function: return "binary field function";
    case PieceKind::renderer: return "renderer";
  }
  return "?";
}

PieceKind kind_of(const Piece& piece) noexcept { return static_cast<PieceKind>(piece.index()); }

namespace {

std::string_view family_name(PlugFamily family) {
  switch (family) {
    case PlugFamily::mapper: return "Mapper";
    case PlugFamily::mapper_cps: return "MapperCps";
    case PlugFamily::shower: return "Shower";
    case PlugFamily::shower_cps: return "ShowerCps";
    case PlugFamily::zipper: return "Zipper";
    case PlugFamily::zipper_cps: return "ZipperCps";
  }
  return "?";
}

PieceKind family_piece(PlugFamily family) {
  switch (family) {
    case PlugFamily::mapper:
    case PlugFamily::mapper_cps: return PieceKind::unary_field_function;
    case PlugFamily::shower:
    case PlugFamily::shower_cps: return PieceKind::renderer;
    case PlugFamily::zipper:
    case PlugFamily::zipper_cps: return PieceKind::binary_field_function;
  }
  return PieceKind::unary_field_function;
}

}  // namespace

std::size_t PlugInstance::input_count() const noexcept {
  return (family_ == PlugFamily::zipper || family_ == PlugFamily::zipper_cps) ? 2 : 1;
}

PlugInstance make_instance(PlugFamily family, std::string_view type) {
  const RecordType& t = lookup_type(type);
  std::string name = std::string(family_name(family)) + "<" + t.name + ">";
  PlugInstance::State state = [&]() -> PlugInstance::State {
    switch (family) {
      case PlugFamily::mapper:
        return PlugInstance::State(std::in_place_index<0>, depure_map(t.name, destructure));
      case PlugFamily::shower:
        return PlugInstance::State(std::in_place_index<0>, depure_show(destructure));
      case PlugFamily::zipper:
        return PlugInstance::State(std::in_place_index<1>,
                                   depure_zip(t.name, destructure, destructure));
      case PlugFamily::mapper_cps:
        return PlugInstance::State(std::in_place_index<2>,
                                   scott::depure_map_cps(t.name, scott::destructure_cps));
      case PlugFamily::shower_cps:
        return PlugInstance::State(std::in_place_index<2>,
                                   scott::depure_show_cps(scott::destructure_cps));
      case PlugFamily::zipper_cps:
        return PlugInstance::State(
            std::in_place_index<3>,
            scott::depure_zip_cps(t.name, scott::destructure_cps, scott::destructure_cps));
    }
    throw UnknownType(std::string(family_name(family)));
  }();
  return PlugInstance(std::move(name), family, family_piece(family), t.schema.arity(),
                      std::move(state));
}

PlugInstance plug(const PlugInstance& whole, const Piece& piece) {
  if (whole.steps_remaining_ == 0) throw ExhaustedError(whole.name_ + ": no ports left to plug");
  if (kind_of(piece) != whole.piece_kind_)
    throw PieceKindError(whole.name_ + ": expected a " + std::string(to_string(whole.piece_kind_)) +
                         ", got a " + std::string(to_string(kind_of(piece))));

  PlugInstance out = whole;
  --out.steps_remaining_;
  switch (whole.family_) {
    case PlugFamily::mapper:
      out.state_.emplace<0>(mapa(std::get<0>(whole.state_), std::get<UnaryFn>(piece)));
      break;
    case PlugFamily::shower:
      out.state_.emplace<0>(showa(std::get<0>(whole.state_), std::get<Renderer>(piece)));
      break;
    case PlugFamily::zipper:
      out.state_.emplace<1>(zipa(std::get<1>(whole.state_), std::get<BinaryFn>(piece)));
      break;
    case PlugFamily::mapper_cps:
      out.state_.emplace<2>(scott::mapa_cps(std::get<2>(whole.state_), std::get<UnaryFn>(piece)));
      break;
    case PlugFamily::shower_cps:
      out.state_.emplace<2>(scott::showa_cps(std::get<2>(whole.state_), std::get<Renderer>(piece)));
      break;
    case PlugFamily::zipper_cps:
      out.state_.emplace<3>(scott::zipa_cps(std::get<3>(whole.state_), std::get<BinaryFn>(piece)));
      break;
  }
  return out;
}

std::variant<Record, std::string> run_instance(const PlugInstance& i,
                                               std::span<const Record> inputs) {
  if (i.steps_remaining_ != 0)
    throw PortsOpenError(i.name_ + ": " + std::to_string(i.steps_remaining_) +
                         " port(s) still open");
  if (inputs.size() != i.input_count())
    throw ArityError("run_instance", inputs.size(),
                     i.name_ + " takes " + std::to_string(i.input_count()) + " input(s)");

  switch (i.family_) {
    case PlugFamily::mapper: return run_map(std::get<0>(i.state_)(inputs[0]));
    case PlugFamily::shower: return run_show(std::get<0>(i.state_)(inputs[0]));
    case PlugFamily::zipper: return run_zip(std::get<1>(i.state_)(inputs[0], inputs[1]));
    case PlugFamily::mapper_cps: return scott::run_map_cps(std::get<2>(i.state_)(inputs[0]));
    case PlugFamily::shower_cps: return scott::run_show_cps(std::get<2>(i.state_)(inputs[0]));
    case PlugFamily::zipper_cps:
      return scott::run_zip_cps(std::get<3>(i.state_)(inputs[0], inputs[1]));
  }
  throw PortsOpenError(i.name_ + ": unknown family");
}

}  // namespace applike
