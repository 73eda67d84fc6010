#pragma once

// Command-line front end.  Kept in a header so the test suite can drive it
// in-process; tools/braidrep.cpp is a thin main().
//
// Exit codes: 0 success (for `verify`, verdict matches the expectation for
// the type); 1 unexpected verdict; 2 usage errors, unsupported types, and
// refused scans.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidrep/render.hpp"
#include "braidrep/repmap.hpp"

namespace braidrep::cli {

namespace detail {

inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BRAIDREP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("BRAIDREP_SEED is not a number");
    }
  }
  return kDefaultSeed;
}

inline int emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << payload;
  return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with braid group representations"};
  app.require_subcommand(1);

  std::string type_text, word_text, format = "text", out_path, seed_text;
  int strands = 0;
  long long bound = 0;
  std::optional<std::uint64_t> seed_flag;
  int samples = 100;
  std::size_t cap = 1'000'000;

  CLI::App* verify_cmd = app.add_subcommand("verify", "check whether the builtin lift is a homomorphism");
  verify_cmd->add_option("type", type_text, "Coxeter type (A5, B4, D4, I2(6))")->required();
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", out_path);
  verify_cmd->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", seed_text, "RNG seed for the projection check");

  CLI::App* nf_cmd = app.add_subcommand("nf", "greedy normal form of a braid word");
  nf_cmd->add_option("--strands", strands, "number of strands")->required();
  nf_cmd->add_option("--word", word_text, "braid word, e.g. \"1 -2 1\"")->required();

  CLI::App* map_cmd = app.add_subcommand("map", "image of a source word under the builtin lift");
  map_cmd->add_option("type", type_text)->required();
  map_cmd->add_option("--word", word_text, "word over s1..sn (S for inverses)")->required();

  CLI::App* render_cmd = app.add_subcommand("render", "draw a braid word");
  render_cmd->add_option("--strands", strands)->required();
  render_cmd->add_option("--word", word_text)->required();
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "ascii", "svg"}));
  render_cmd->add_option("--out", out_path);

  CLI::App* scan_cmd = app.add_subcommand("scan", "injectivity / kernel scan of the builtin lift");
  scan_cmd->add_option("type", type_text)->required();
  scan_cmd->add_option("--bound", bound, "grid radius or max canonical length")->required();
  scan_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  scan_cmd->add_option("--out", out_path);
  scan_cmd->add_option("--cap", cap, "enumeration cap");
  scan_cmd->add_option("--seed", seed_text, "accepted for interface symmetry");

  std::vector<std::string> argv_like = args;
  argv_like.insert(argv_like.begin(), "braidrep");
  std::vector<const char*> argv;
  for (const auto& a : argv_like) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // CLI11 uses 0 for --help; map real parse failures to 2.
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!seed_text.empty()) seed_flag = std::stoull(seed_text);
    if (*verify_cmd) {
      const CoxeterType type = CoxeterType::parse(type_text);
      const RepMap map = build_for(type);
      VerifyOptions opt;
      opt.samples = samples;
      opt.seed = detail::resolve_seed(seed_flag);
      const VerificationReport rep = verify(map, opt);
      detail::emit(format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text(), out_path, out);
      const bool expected = type.family != Family::D;
      return rep.is_homomorphism == expected && rep.embedding_relations_ok ? 0 : 1;
    }

    if (*nf_cmd) {
      const Realization r = Realization::symmetric_group(strands);
      const BraidElement x = BraidElement::from_word(BraidWord::parse(r, word_text));
      out << x.text() << "\n";
      return 0;
    }

    if (*map_cmd) {
      const CoxeterType type = CoxeterType::parse(type_text);
      const RepMap map = build_for(type);
      if (type.family == Family::D)
        err << "warning: the D4 lift is not a homomorphism; the image depends on the "
               "spelling of the word\n";
      const BraidWord src = BraidWord::parse(*map.source, word_text);
      const BraidElement img = apply_map(map, src.letters);
      out << "word: " << img.to_word().text() << "\n";
      out << "nf: " << img.text() << "\n";
      out << "permutation: " << img.underlying_permutation().cycle_text() << "\n";
      out << "pure: " << (img.is_pure() ? "yes" : "no") << "\n";
      return 0;
    }

    if (*render_cmd) {
      const Realization r = Realization::symmetric_group(strands);
      const BraidWord w = BraidWord::parse(r, word_text);
      const std::string payload = format == "svg" ? render_svg(strands, w.letters)
                                                  : render_ascii(strands, w.letters);
      detail::emit(payload, out_path, out);
      return 0;
    }

    if (*scan_cmd) {
      const CoxeterType type = CoxeterType::parse(type_text);
      if (type.family == Family::D) {
        err << "error: scan refused: the D4 lift is not a homomorphism, so images of "
               "group elements are not well defined\n";
        return 2;
      }
      const RepMap map = build_for(type);
      const ScanReport rep = type == CoxeterType(Family::I2, 2)
                                 ? injectivity_scan_i2_2(map, static_cast<int>(bound))
                                 : kernel_scan(map, static_cast<int>(bound), cap);
      detail::emit(format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text(), out_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace braidrep::cli
