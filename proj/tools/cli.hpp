#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagorbits/flagorbits.hpp"

namespace flagorbits::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kDefaultCeiling = 7;

namespace detail {

struct Options {
  int n = 0;
  bool allow_large = false;
  std::string format;
  std::string from;
  std::string value;
  std::string pair;
  std::string root;
  std::string out_file;
  std::string level = "full";
  bool all_moves = false;
};

inline std::string words_suffix(const StandardizedPair& sp, int n) {
  return n == 3 ? "  " + sp.to_words() : "";
}

inline void print_labels(std::ostream& out, const ShareshianPair& pair) {
  const int n = pair.degree();
  auto sp = standardize(pair);
  out << "pair:         " << pair.to_string() << "\n";
  out << "standardized: " << sp.to_string() << words_suffix(sp, n) << "\n";
  out << "decorated:    " << pair_to_decorated(pair).to_string() << "\n";
  out << "flag:         " << pair_to_flag(pair).to_string() << "\n";
  out << "dim:          " << dim_of_pair(pair) << "\n";
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  auto atlas = build_atlas(o.n);
  if (o.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& rec : atlas) {
      nlohmann::ordered_json j;
      j["id"] = rec.id;
      j["w"] = rec.pair.w().to_string();
      j["ustar"] = rec.pair.u_star().to_string();
      j["u"] = rec.standardized.u.to_string();
      j["delta"] = rec.pair.delta().elements();
      j["dim"] = rec.dim;
      j["flag"] = rec.flag.to_string();
      if (o.n == 3) j["words"] = rec.standardized.to_words();
      doc.push_back(std::move(j));
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  const int width = std::max(6, 2 * o.n);
  out << std::left << std::setw(5) << "id" << std::setw(width) << "w" << std::setw(width)
      << "ustar" << std::setw(width) << "u" << std::setw(width) << "delta" << std::setw(5)
      << "dim" << std::setw(3 * o.n + 2) << "flag";
  if (o.n == 3) out << "words";
  out << "\n";
  for (const auto& rec : atlas) {
    out << std::setw(5) << rec.id << std::setw(width) << rec.pair.w().to_string()
        << std::setw(width) << rec.pair.u_star().to_string() << std::setw(width)
        << rec.standardized.u.to_string() << std::setw(width) << rec.pair.delta().to_string()
        << std::setw(5) << rec.dim << std::setw(3 * o.n + 2) << rec.flag.to_string();
    if (o.n == 3) out << rec.standardized.to_words();
    out << "\n";
  }
  return kExitOk;
}

inline int cmd_convert(const Options& o, std::ostream& out) {
  if (o.from == "pair") {
    print_labels(out, ShareshianPair::parse(o.value, o.n));
  } else if (o.from == "flag") {
    print_labels(out, flag_to_pair(StandardFlag::parse(o.value, o.n)));
  } else {
    print_labels(out, decorated_to_pair(DecoratedPermutation::parse(o.value, o.n)));
  }
  return kExitOk;
}

inline int cmd_dim(const Options& o, std::ostream& out) {
  out << dim_of_pair(ShareshianPair::parse(o.pair, o.n)) << "\n";
  return kExitOk;
}

inline int cmd_act(const Options& o, std::ostream& out) {
  if (o.all_moves) {
    out << export_move_log(all_moves(enumerate_pairs(o.n)));
    return kExitOk;
  }
  if (o.pair.empty() || o.root.empty())
    throw CLI::ValidationError("act", "--pair and --root are required unless --all is given");
  auto root = RootLabel::parse(o.root);
  auto mv = act(root, ShareshianPair::parse(o.pair, o.n));
  auto sp = standardize(mv.target);
  out << "type:   " << to_string(mv.root_type) << "\n";
  out << "target: " << mv.target.to_string() << "\n";
  out << "        " << sp.to_string() << words_suffix(sp, o.n) << "\n";
  out << "dim:    " << dim_of_pair(mv.source) << " -> " << dim_of_pair(mv.target) << "\n";
  return kExitOk;
}

inline int cmd_poset(const Options& o, std::ostream& out) {
  auto poset = build_poset(o.n);
  const std::string text = o.format == "json" ? export_json(poset) : export_dot(poset);
  if (o.out_file.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.out_file);
  file << text;
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  auto report = verify(o.n, o.level == "quick" ? VerifyLevel::Quick : VerifyLevel::Full);
  out << report.to_text();
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits of B_{n-1} on the flag variety of gl(n)", "flagorbits"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("n", o.n, "degree")->required()->check(CLI::Range(2, 64));
    sub->add_flag("--allow-large", o.allow_large, "permit n above 7");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list every orbit with all labels");
  add_n(enumerate);
  enumerate->add_option("--format", o.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->default_val("table");

  auto* convert = app.add_subcommand("convert", "translate one label into the others");
  add_n(convert);
  convert->add_option("--from", o.from, "pair, flag or decorated")
      ->required()
      ->check(CLI::IsMember({"pair", "flag", "decorated"}));
  convert->add_option("--value", o.value, "label text")->required();

  auto* dim = app.add_subcommand("dim", "orbit dimension of a pair");
  add_n(dim);
  dim->add_option("--pair", o.pair, "w=...;ustar=...")->required();

  auto* act_cmd = app.add_subcommand("act", "apply one simple root to a pair");
  add_n(act_cmd);
  act_cmd->add_option("--pair", o.pair, "w=...;ustar=...");
  act_cmd->add_option("--root", o.root, "left:<i> or right:<i>");
  act_cmd->add_flag("--all", o.all_moves, "JSON-lines log of every move");

  auto* poset = app.add_subcommand("poset", "closure order Hasse diagram");
  add_n(poset);
  poset->add_option("--format", o.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->default_val("dot");
  poset->add_option("--out", o.out_file, "output file");

  auto* verify_cmd = app.add_subcommand("verify", "run the cross-checks");
  add_n(verify_cmd);
  verify_cmd->add_option("--level", o.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->default_val("full");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (o.n > kDefaultCeiling && !o.allow_large)
      throw CLI::ValidationError("n", "n above " + std::to_string(kDefaultCeiling) +
                                          " needs --allow-large");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  if (o.n > kDefaultCeiling && (poset->parsed() || verify_cmd->parsed() || enumerate->parsed()))
    err << "warning: n=" << o.n << " is expensive; all-pairs work grows quickly\n";

  auto* sub = app.get_subcommands().front();
  try {
    if (sub == enumerate) return detail::cmd_enumerate(o, out);
    if (sub == convert) return detail::cmd_convert(o, out);
    if (sub == dim) return detail::cmd_dim(o, out);
    if (sub == act_cmd) return detail::cmd_act(o, out);
    if (sub == poset) return detail::cmd_poset(o, out);
    return detail::cmd_verify(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace flagorbits::cli
