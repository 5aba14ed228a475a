// fourmap: command-line front end over the fourmap C API.
//
// Exit status: 0 success or expected verdict, 1 verification failure,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fourmap/fourmap.h"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct CliError {
  int code;
  std::string message;
};

void check(fm_status status) {
  if (status == FM_OK) return;
  throw CliError{status == FM_ERR_INTERNAL ? kVerificationFailed : kUsage,
                 std::string(fm_status_name(status)) + ": " + fm_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { fm_string_free(s); }
};
struct MapDeleter {
  void operator()(fm_map* m) const { fm_map_free(m); }
};
struct ColoringDeleter {
  void operator()(fm_coloring* c) const { fm_coloring_free(c); }
};
struct EmbeddingDeleter {
  void operator()(fm_embedding* e) const { fm_embedding_free(e); }
};
struct VoxelsDeleter {
  void operator()(fm_voxels* v) const { fm_voxels_free(v); }
};

using Text = std::unique_ptr<char, StringDeleter>;
using Map = std::unique_ptr<fm_map, MapDeleter>;
using ColoringPtr = std::unique_ptr<fm_coloring, ColoringDeleter>;
using Embedding = std::unique_ptr<fm_embedding, EmbeddingDeleter>;
using Voxels = std::unique_ptr<fm_voxels, VoxelsDeleter>;

std::string take(char* raw) {
  Text owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kUsage, "cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << body)) throw CliError{kUsage, "cannot write '" + path + "'"};
}

Map load_map(const std::string& path) {
  fm_map* raw = nullptr;
  check(fm_map_from_json(read_input(path).c_str(), &raw));
  return Map(raw);
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size() || v < INT32_MIN || v > INT32_MAX) throw std::out_of_range(s);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw CliError{kUsage, what + " must be an integer, got '" + s + "'"};
  }
}

std::uint64_t to_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    if (!s.empty() && s[0] == '-') throw std::out_of_range(s);
    auto v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::out_of_range(s);
    return v;
  } catch (const std::exception&) {
    throw CliError{kUsage, what + " must be a non-negative integer, got '" + s + "'"};
  }
}

std::string map_text(const fm_map* map, const fm_coloring* col, const std::string& format, bool dotted) {
  char* out = nullptr;
  if (format == "dot") {
    check(fm_map_to_dot(map, col, dotted ? 1 : 0, &out));
  } else if (col) {
    check(fm_coloring_to_json(map, col, &out));
  } else {
    check(fm_map_to_json(map, &out));
  }
  return take(out);
}

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  bool show_dotted = false;
  bool exact = false;
  bool induction = false;
  int k = 4;
  bool witness = false;
  std::string kind;
  std::vector<std::string> args;
  bool closed = false;
  std::string claim;
  std::string seed = "0";
};

int run_color(const Options& o) {
  Map map = load_map(o.input);
  fm_coloring* raw = nullptr;
  if (o.exact) {
    int chi = 0;
    check(fm_color_exact(map.get(), o.k, &chi, &raw));
    if (chi == 0) {
      std::cerr << "fourmap: map is not " << o.k << "-colorable\n";
      return kVerificationFailed;
    }
  } else {
    check(fm_color_induction(map.get(), o.k, &raw));
    if (!raw) {
      std::cerr << "fourmap: induction coloring exhausted its search with " << o.k << " colors\n";
      return kVerificationFailed;
    }
  }
  ColoringPtr col(raw);
  write_output(o.output, map_text(map.get(), col.get(), o.format, o.show_dotted));
  return kOk;
}

int run_planarity(const Options& o) {
  Map map = load_map(o.input);
  int planar = 0;
  check(fm_is_planar(map.get(), &planar));
  std::string json = std::string("{\"planar\":") + (planar ? "true" : "false");
  if (o.witness) {
    char* w = nullptr;
    check(fm_find_kuratowski(map.get(), &w));
    std::string witness = take(w);
    json += ",\"witness\":" + (witness.empty() ? std::string("null") : witness);
  }
  json += "}";
  write_output(o.output, json);
  return kOk;
}

int run_euler(const Options& o) {
  fm_embedding* raw = nullptr;
  check(fm_embedding_from_json(read_input(o.input).c_str(), &raw));
  Embedding emb(raw);
  char* out = nullptr;
  int consistent = 0;
  check(fm_euler_check(emb.get(), &out, &consistent));
  write_output(o.output, take(out));
  return consistent ? kOk : kVerificationFailed;
}

void expect_args(const Options& o, std::size_t n, const std::string& usage) {
  if (o.args.size() != n) throw CliError{kUsage, "usage: generate " + usage};
}

int run_generate(const Options& o) {
  const auto& kind = o.kind;
  if (kind == "figure1" || kind == "figure1-mn") {
    expect_args(o, 0, kind);
    fm_embedding* raw = nullptr;
    check(kind == "figure1" ? fm_generate_figure1(&raw) : fm_generate_figure1_mn(&raw));
    Embedding emb(raw);
    char* out = nullptr;
    check(fm_embedding_to_json(emb.get(), &out));
    write_output(o.output, take(out));
    return kOk;
  }
  if (kind == "boxes") {
    expect_args(o, 1, "boxes m");
    fm_voxels* raw = nullptr;
    check(fm_generate_boxes(to_int(o.args[0], "m"), &raw));
    Voxels cx(raw);
    char* out = nullptr;
    check(fm_voxels_to_json(cx.get(), &out));
    write_output(o.output, take(out));
    return kOk;
  }
  fm_map* raw = nullptr;
  if (kind == "base5") {
    expect_args(o, 0, "base5");
    check(fm_generate_base5(&raw, nullptr));
  } else if (kind == "flower") {
    expect_args(o, 0, "flower");
    check(fm_generate_flower(&raw, nullptr));
  } else if (kind == "multipartite") {
    expect_args(o, 4, "multipartite i j k l");
    check(fm_generate_multipartite(to_int(o.args[0], "i"), to_int(o.args[1], "j"), to_int(o.args[2], "k"),
                                   to_int(o.args[3], "l"), &raw));
  } else if (kind == "random") {
    expect_args(o, 2, "random n seed");
    check(fm_generate_random(to_int(o.args[0], "n"), to_u64(o.args[1], "seed"), &raw));
  } else if (kind == "curve") {
    expect_args(o, 1, "curve n [--closed]");
    check(fm_generate_curve(to_int(o.args[0], "n"), o.closed ? 1 : 0, &raw));
  } else {
    throw CliError{kUsage, "unknown generator '" + kind + "'"};
  }
  Map map(raw);
  write_output(o.output, map_text(map.get(), nullptr, o.format, o.show_dotted));
  return kOk;
}

int run_claims(const Options& o) {
  std::uint64_t seed = to_u64(o.seed, "seed");
  char* out = nullptr;
  int ok = 0;
  if (o.claim.empty()) {
    check(fm_run_all(seed, &out, &ok));
    write_output(o.output, take(out));
  } else {
    fm_claim_config config;
    fm_claim_config_default(&config);
    config.seed = seed;
    check(fm_run_claim(o.claim.c_str(), &config, &out, &ok));
    write_output(o.output, "[" + take(out) + "]");
  }
  return ok ? kOk : kVerificationFailed;
}

int run_hyperdim(const Options& o) {
  if (o.args.size() != 1 || (o.kind != "check-n1" && o.kind != "check-n3")) {
    throw CliError{kUsage, "usage: hyperdim {check-n1 N | check-n3 M}"};
  }
  fm_claim_config config;
  fm_claim_config_default(&config);
  const char* claim = nullptr;
  if (o.kind == "check-n1") {
    config.curve_max = to_int(o.args[0], "N");
    claim = "Conjecture6_1_n1";
  } else {
    config.boxes_m = to_int(o.args[0], "M");
    claim = "Conjecture6_1_n3";
  }
  char* out = nullptr;
  int ok = 0;
  check(fm_run_claim(claim, &config, &out, &ok));
  write_output(o.output, take(out));
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar map coloring toolkit"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Output path (default stdout)"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    sub->add_flag("--show-dotted", o.show_dotted, "DOT: dashed edges between non-adjacent faces");
  };

  auto* color = app.add_subcommand("color", "Color a map");
  color->add_option("map", o.input, "Map JSON (default stdin)");
  auto* exact = color->add_flag("--exact", o.exact, "Exact minimum coloring");
  color->add_flag("--induction", o.induction, "Breadth-first extension with backtracking (default)")->excludes(exact);
  color->add_option("--k", o.k, "Palette size / color limit")->check(CLI::Range(1, 1024));
  add_format(color);
  add_output(color);

  auto* planarity = app.add_subcommand("planarity", "Planarity verdict and Kuratowski witness");
  planarity->add_option("map", o.input, "Map JSON (default stdin)");
  planarity->add_flag("--witness", o.witness, "Extract a K5 / K3,3 subdivision when non-planar");
  add_output(planarity);

  auto* euler = app.add_subcommand("euler", "Euler characteristic of an embedding");
  euler->add_option("embedding", o.input, "Embedding JSON (default stdin)");
  add_output(euler);

  auto* generate = app.add_subcommand("generate", "Emit a named instance");
  generate->add_option("kind", o.kind, "figure1 | figure1-mn | base5 | multipartite | random | flower | boxes | curve")
      ->required();
  generate->add_option("args", o.args, "Generator arguments");
  generate->add_flag("--closed", o.closed, "curve: closed curve");
  add_format(generate);
  add_output(generate);

  auto* claims = app.add_subcommand("claims", "Run the claim verification harness");
  claims->add_option("--claim", o.claim, "Single claim id");
  claims->add_option("--seed", o.seed, "Master seed");
  add_output(claims);

  auto* hyperdim = app.add_subcommand("hyperdim", "Check the (n+2)-color bound in dimension 1 or 3");
  hyperdim->add_option("check", o.kind, "check-n1 | check-n3")->required();
  hyperdim->add_option("size", o.args, "N or M")->expected(1);
  add_output(hyperdim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fourmap: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*color) return run_color(o);
    if (*planarity) return run_planarity(o);
    if (*euler) return run_euler(o);
    if (*generate) return run_generate(o);
    if (*claims) return run_claims(o);
    if (*hyperdim) return run_hyperdim(o);
  } catch (const CliError& e) {
    std::cerr << "fourmap: " << e.message << "\n";
    return e.code;
  }
  return kUsage;
}
