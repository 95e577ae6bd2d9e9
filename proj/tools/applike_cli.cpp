// Command-line front end: records cross the boundary as flat JSON, one per
// line; binary images as lowercase hex.

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "applike/codecs.hpp"
#include "applike/pipelines.hpp"
#include "applike/scott.hpp"

namespace {

using namespace applike;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string trim_newlines(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string read_line(std::istream& in) {
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// CLI type names map onto registry entries; `benchmark` is the Int-app one.
std::string resolve_type(const std::string& name) {
  if (name == "device") return std::string(types::device);
  if (name == "benchmark") return std::string(types::benchmark);
  if (name == "benchmark-avg") return std::string(types::benchmark_avg);
  if (name == "benchmark-argv") return std::string(types::benchmark_argv);
  return name;
}

struct Options {
  std::string type = "device";
  std::string encoding = "lisp";
};

int cmd_show(const Options& o, std::istream& in, std::ostream& out) {
  const std::string type = resolve_type(o.type);
  const Record r = from_named(trim_newlines(read_all(in)), type);
  if (o.encoding == "scott")
    out << scott::run_show_cps(scott::show_pipeline_cps(type)(r)) << '\n';
  else
    out << run_show(show_pipeline(type)(r)) << '\n';
  return 0;
}

int cmd_parse(const Options& o, std::istream& in, std::ostream& out) {
  out << to_named(parse_record(read_line(in), resolve_type(o.type))) << '\n';
  return 0;
}

int cmd_map_demo(const Options& o, std::ostream& out) {
  const Record input = to_record(example_device);
  const Record r = o.encoding == "scott" ? scott::run_map_cps(scott::map_device_pipeline_cps()(input))
                                         : run_map(map_device_pipeline()(input));
  out << to_named(r) << '\n';
  return 0;
}

int cmd_zip_demo(const Options& o, std::ostream& out) {
  const Record a = to_record(example_device);
  Record r;
  if (o.encoding == "scott") {
    const Record b = scott::run_map_cps(scott::map_device_pipeline_cps()(a));
    r = scott::run_zip_cps(scott::zip_device_pipeline_cps()(a, b));
  } else {
    const Record b = run_map(map_device_pipeline()(a));
    r = run_zip(zip_device_pipeline()(a, b));
  }
  out << to_named(r) << '\n';
  return 0;
}

int cmd_remap_demo(std::ostream& out) {
  out << to_named(run_map(remap_device_pipeline()(to_record(example_device)))) << '\n';
  return 0;
}

int cmd_avg(std::istream& in, std::ostream& out) {
  std::vector<Benchmark> outputs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    outputs.push_back(to_benchmark(from_named(line, types::benchmark)));
  }
  out << to_named(to_record(average(outputs))) << '\n';
  return 0;
}

int cmd_encode_bin(const Options& o, std::istream& in, std::ostream& out) {
  out << to_hex(encode_binary(from_named(trim_newlines(read_all(in)), resolve_type(o.type))))
      << '\n';
  return 0;
}

int cmd_decode_bin(const Options& o, std::istream& in, std::ostream& out) {
  out << to_named(decode_binary(from_hex(read_all(in)), resolve_type(o.type))) << '\n';
  return 0;
}

// Accepts any key order and whitespace; prints the canonical form.
int cmd_from_json(const Options& o, std::istream& in, std::ostream& out) {
  out << to_named(from_named(trim_newlines(read_all(in)), resolve_type(o.type))) << '\n';
  return 0;
}

// Input must already be canonical; echoes it unchanged.
int cmd_to_json(const Options& o, std::istream& in, std::ostream& out) {
  const std::string text = trim_newlines(read_all(in));
  const std::string canonical = to_named(from_named(text, resolve_type(o.type)));
  if (canonical != text)
    throw CodecError(CodecErrc::malformed_json, "not in canonical form; expected " + canonical, 0);
  out << canonical << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Applicative-like record transformations: show, parse, map, zip, codecs"};
  app.require_subcommand(1);

  Options opts;
  const std::vector<std::string> type_names{"device", "benchmark", "benchmark-avg", "benchmark-argv"};
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", opts.type, "record type")->check(CLI::IsMember(type_names));
  };
  auto add_encoding = [&](CLI::App* sub) {
    sub->add_option("--encoding", opts.encoding, "record encoding track")
        ->check(CLI::IsMember({"lisp", "scott"}));
  };

  auto* show = app.add_subcommand("show", "JSON record on stdin -> lexeme line");
  add_type(show);
  add_encoding(show);
  auto* parse = app.add_subcommand("parse", "lexeme line on stdin -> JSON record");
  add_type(parse);
  auto* map_demo = app.add_subcommand("map-demo", "map (not, +100, +200) over the example device");
  add_encoding(map_demo);
  auto* zip_demo = app.add_subcommand("zip-demo", "zip (&&, +, +) the example device with its map");
  add_encoding(zip_demo);
  auto* remap_demo = app.add_subcommand("remap-demo", "stack-machine remap of the example device");
  auto* avg = app.add_subcommand("avg", "JSON benchmarks, one per line -> averaged benchmark");
  auto* encode_bin = app.add_subcommand("encode-bin", "JSON record -> hex binary image");
  add_type(encode_bin);
  auto* decode_bin = app.add_subcommand("decode-bin", "hex binary image -> JSON record");
  add_type(decode_bin);
  auto* to_json = app.add_subcommand("to-json", "validate canonical JSON and echo it");
  add_type(to_json);
  auto* from_json = app.add_subcommand("from-json", "validate JSON and print it canonically");
  add_type(from_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    std::istream& in = std::cin;
    std::ostream& out = std::cout;
    if (show->parsed()) return cmd_show(opts, in, out);
    if (parse->parsed()) return cmd_parse(opts, in, out);
    if (map_demo->parsed()) return cmd_map_demo(opts, out);
    if (zip_demo->parsed()) return cmd_zip_demo(opts, out);
    if (remap_demo->parsed()) return cmd_remap_demo(out);
    if (avg->parsed()) return cmd_avg(in, out);
    if (encode_bin->parsed()) return cmd_encode_bin(opts, in, out);
    if (decode_bin->parsed()) return cmd_decode_bin(opts, in, out);
    if (to_json->parsed()) return cmd_to_json(opts, in, out);
    if (from_json->parsed()) return cmd_from_json(opts, in, out);
  } catch (const applike::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  std::cerr << "usage error: no subcommand\n";
  return kUsageError;
}
