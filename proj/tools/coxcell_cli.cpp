// coxcell — command-line front end over the public C API.
//
// Subcommands: build, word, hecke, collapse, poset, tnn.  All output is
// deterministic JSON on stdout (optionally written to files).  Exit codes:
// 0 success, 1 a requested verification failed, 2 invalid input, 3 internal
// error.
// SPDX-License-Identifier: MIT
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxcell.h"

namespace {

using SystemPtr = std::unique_ptr<cxc_system, decltype(&cxc_system_destroy)>;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options shared by every subcommand that needs a Coxeter system.
struct SystemOptions {
  std::string type;
  int rank = 0;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* t = cmd->add_option("--type", type, "named type, one of A B C D E F G")
                  ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
    auto* r = cmd->add_option("--rank", rank, "rank of the named type");
    auto* f = cmd->add_option("--coxeter-file", file,
                              "file with the rank and the Coxeter matrix");
    t->needs(r);
    r->needs(t);
    f->excludes(t);
  }

  SystemPtr create() const {
    cxc_system* sys = nullptr;
    cxc_status rc;
    if (!file.empty())
      rc = cxc_system_create_from_file(file.c_str(), &sys);
    else if (!type.empty())
      rc = cxc_system_create(type[0], rank, &sys);
    else
      throw BadInput("pass either --type with --rank or --coxeter-file");
    if (rc != CXC_OK) throw BadInput(cxc_last_error());
    return SystemPtr(sys, &cxc_system_destroy);
  }
};

// Parses "1,2,1" into 1-based letters; "e" or "" is the empty word.
std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "e") return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    const std::string piece = text.substr(pos, comma - pos);
    try {
      size_t used = 0;
      const int letter = std::stoi(piece, &used);
      if (used != piece.size() || letter <= 0) throw std::invalid_argument(piece);
      out.push_back(letter);
    } catch (const std::exception&) {
      throw BadInput("malformed word '" + text + "': letters are 1-based integers");
    }
    pos = comma + 1;
  }
  return out;
}

// Splits "1,1/2,3" into raw parameter strings (validated by the library).
std::vector<std::string> split_params(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw BadInput("cannot open '" + path + "' for writing");
  f << text << '\n';
}

// Prints (or writes) the JSON produced by a call and maps its status to an
// exit code.  `json` may be null when the call failed before producing any.
int deliver(cxc_status rc, char* json, const std::string& out_path) {
  std::unique_ptr<char, decltype(&cxc_free_string)> guard(json, &cxc_free_string);
  if (rc == CXC_OK || rc == CXC_VIOLATION) {
    if (json != nullptr) {
      if (out_path.empty())
        std::cout << json << '\n';
      else
        write_file(out_path, json);
    }
    return rc == CXC_OK ? 0 : 1;
  }
  std::cerr << "error: " << cxc_last_error() << '\n';
  return rc == CXC_INVALID_INPUT ? 2 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxcell: collapse engine for expression face complexes"};
  app.set_version_flag("--version", cxc_version());
  app.require_subcommand(1);

  SystemOptions sys_build, sys_word, sys_hecke, sys_collapse, sys_poset, sys_tnn;
  std::string word_text, lower_text, upper_text, params_text;
  std::string mode = "full", out_path, dot_path;
  bool verify = false, quotient = false, minors = false, cell = false, fibers = false;

  CLI::App* cmd_build = app.add_subcommand("build", "construct a system and describe it");
  sys_build.attach(cmd_build);

  CLI::App* cmd_word = app.add_subcommand("word", "analyze one word");
  sys_word.attach(cmd_word);
  cmd_word->add_option("--word", word_text, "word, e.g. 1,2,1")->required();

  CLI::App* cmd_hecke =
      app.add_subcommand("hecke", "deletion and omittable pairs with scripts");
  sys_hecke.attach(cmd_hecke);
  cmd_hecke->add_option("--word", word_text, "word, e.g. 1,2,1,2")->required();

  CLI::App* cmd_collapse =
      app.add_subcommand("collapse", "collapse the word's face complex");
  sys_collapse.attach(cmd_collapse);
  cmd_collapse->add_option("--word", word_text, "word, e.g. 1,2,1,2")->required();
  cmd_collapse->add_option("--mode", mode, "full or commutation (default full)")
      ->check(CLI::IsMember({"full", "commutation"}));
  cmd_collapse->add_flag("--verify", verify, "replay the step and run invariants");
  cmd_collapse->add_flag("--quotient", quotient, "embed the quotient cell order");
  cmd_collapse->add_option("--out", out_path, "write the JSON to a file");

  CLI::App* cmd_poset = app.add_subcommand("poset", "order interval as a graded poset");
  sys_poset.attach(cmd_poset);
  cmd_poset->add_option("--lower", lower_text, "lower end word (default e)");
  cmd_poset->add_option("--upper", upper_text, "upper end word")->required();
  cmd_poset->add_flag("--check", verify, "run the structural battery");
  cmd_poset->add_option("--dot", dot_path, "write a DOT rendering to a file");

  CLI::App* cmd_tnn = app.add_subcommand("tnn", "exact matrix oracle (chain systems)");
  sys_tnn.attach(cmd_tnn);
  cmd_tnn->add_option("--word", word_text, "word, e.g. 1,2,1")->required();
  cmd_tnn->add_option("--params", params_text, "rational parameters, e.g. 1,1/2,3");
  cmd_tnn->add_flag("--minors", minors, "test all minors for nonnegativity");
  cmd_tnn->add_flag("--cell", cell, "locate the cell of the matrix");
  cmd_tnn->add_flag("--fibers", fibers,
                    "verify the full collapse trace against the matrix model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    char* json = nullptr;
    if (cmd_build->parsed()) {
      const SystemPtr sys = sys_build.create();
      const cxc_status rc = cxc_system_describe(sys.get(), &json);
      return deliver(rc, json, "");
    }
    if (cmd_word->parsed()) {
      const SystemPtr sys = sys_word.create();
      const std::vector<int> w = parse_word(word_text);
      const cxc_status rc =
          cxc_word_analyze(sys.get(), w.data(), static_cast<int>(w.size()), &json);
      return deliver(rc, json, "");
    }
    if (cmd_hecke->parsed()) {
      const SystemPtr sys = sys_hecke.create();
      const std::vector<int> w = parse_word(word_text);
      const cxc_status rc =
          cxc_hecke_report(sys.get(), w.data(), static_cast<int>(w.size()), &json);
      return deliver(rc, json, "");
    }
    if (cmd_collapse->parsed()) {
      const SystemPtr sys = sys_collapse.create();
      const std::vector<int> w = parse_word(word_text);
      const cxc_status rc =
          cxc_collapse_run(sys.get(), w.data(), static_cast<int>(w.size()),
                           mode == "full" ? 1 : 0, verify ? 1 : 0, quotient ? 1 : 0,
                           &json);
      return deliver(rc, json, out_path);
    }
    if (cmd_poset->parsed()) {
      const SystemPtr sys = sys_poset.create();
      const std::vector<int> lo = parse_word(lower_text);
      const std::vector<int> up = parse_word(upper_text);
      char* dot = nullptr;
      const cxc_status rc = cxc_interval_poset(
          sys.get(), lo.data(), static_cast<int>(lo.size()), up.data(),
          static_cast<int>(up.size()), verify ? 1 : 0, &json,
          dot_path.empty() ? nullptr : &dot);
      std::unique_ptr<char, decltype(&cxc_free_string)> dguard(dot, &cxc_free_string);
      if (dot != nullptr && (rc == CXC_OK || rc == CXC_VIOLATION))
        write_file(dot_path, dot);
      return deliver(rc, json, "");
    }
    if (cmd_tnn->parsed()) {
      const SystemPtr sys = sys_tnn.create();
      const std::vector<int> w = parse_word(word_text);
      if (fibers) {
        const cxc_status rc =
            cxc_fiber_check(sys.get(), w.data(), static_cast<int>(w.size()), &json);
        return deliver(rc, json, "");
      }
      const std::vector<std::string> params = split_params(params_text);
      std::vector<const char*> raw;
      raw.reserve(params.size());
      for (const std::string& p : params) raw.push_back(p.c_str());
      const cxc_status rc =
          cxc_tnn_eval(sys.get(), w.data(), static_cast<int>(w.size()), raw.data(),
                       minors ? 1 : 0, cell ? 1 : 0, &json);
      return deliver(rc, json, "");
    }
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 3;  // unreachable: a subcommand is required
}
