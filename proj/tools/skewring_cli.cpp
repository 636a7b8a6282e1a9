#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "skewring.h"

namespace {

constexpr int kExitNegative = 3;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

struct GroupDeleter {
  void operator()(sr_group* g) const { sr_group_free(g); }
};
using GroupPtr = std::unique_ptr<sr_group, GroupDeleter>;

struct StringDeleter {
  void operator()(char* s) const { sr_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die_input(const std::string& context) {
  std::cerr << "error: " << context << ": " << sr_last_error() << "\n";
  std::exit(kExitInput);
}

// --group accepts a presentation literal or a path to a file holding a
// presentation or an "order n" multiplication table
GroupPtr load_group(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec[0] != '<') {
    std::ifstream in(spec);
    if (!in) {
      std::cerr << "error: cannot open group file '" << spec << "'\n";
      std::exit(kExitInput);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  sr_group* g = nullptr;
  size_t start = text.find_first_not_of(" \t\r\n");
  bool table = start != std::string::npos && text.compare(start, 5, "order") == 0;
  sr_status st = table ? sr_group_from_table(text.c_str(), &g)
                       : sr_group_from_presentation(text.c_str(), &g);
  if (st != SR_OK) die_input("loading group");
  return GroupPtr(g);
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file);
  if (!out) {
    std::cerr << "error: cannot write '" << out_file << "'\n";
    std::exit(kExitInput);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutativity of antisymmetric elements of oriented group rings"};
  app.require_subcommand(1);

  std::string group_spec, kernel, ring = "z", ringclass = "r2zero";
  std::string format = "plain", out_file;
  int max_rank = 2;
  std::string rings = "z,z/4,z/8";

  CLI::App* check = app.add_subcommand(
      "check", "brute-force commutativity verdict for one instance");
  check->add_option("--group", group_spec, "presentation or file")->required();
  check->add_option("--kernel", kernel, "generator words of the kernel")
      ->required();
  check->add_option("--ring", ring, "z or z/<m> (default z)");

  CLI::App* kernels = app.add_subcommand(
      "kernels", "list all index-2 subgroups of the group");
  kernels->add_option("--group", group_spec, "presentation or file")
      ->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "structural case matching for one instance");
  classify->add_option("--group", group_spec, "presentation or file")
      ->required();
  classify->add_option("--kernel", kernel, "generator words of the kernel")
      ->required();
  classify->add_option("--ringclass", ringclass, "r2zero|char4|other");

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "re-derive the cataloged good/bad kernel partitions");
  verify->add_option("--format", format, "plain|tsv");
  verify->add_option("--out", out_file, "write report to file");

  CLI::App* census_cmd = app.add_subcommand(
      "census", "cross-validate brute force against the classifier");
  census_cmd->add_option("--max-rank", max_rank, "extra C2 factors, default 2");
  census_cmd->add_option("--rings", rings, "default z,z/4,z/8");
  census_cmd->add_option("--format", format, "plain|tsv");
  census_cmd->add_option("--out", out_file, "write report to file");

  CLI::App* audit = app.add_subcommand(
      "audit", "check structural invariants of a commutative instance");
  audit->add_option("--group", group_spec, "presentation or file")->required();
  audit->add_option("--kernel", kernel, "generator words of the kernel")
      ->required();
  audit->add_option("--ring", ring, "z or z/<m> (default z)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (check->parsed()) {
    GroupPtr g = load_group(group_spec);
    int comm = 0;
    char* witness = nullptr;
    if (sr_check(g.get(), kernel.c_str(), ring.c_str(), &comm, &witness) !=
        SR_OK)
      die_input("check");
    StrPtr w(witness);
    if (comm) {
      std::cout << "commutative\n";
      return 0;
    }
    std::cout << "not commutative\nwitness: " << w.get() << "\n";
    return kExitNegative;
  }

  if (kernels->parsed()) {
    GroupPtr g = load_group(group_spec);
    char* text = nullptr;
    if (sr_kernels_list(g.get(), &text) != SR_OK) die_input("kernels");
    StrPtr t(text);
    std::cout << t.get();
    return 0;
  }

  if (classify->parsed()) {
    GroupPtr g = load_group(group_spec);
    char* label = nullptr;
    if (sr_classify(g.get(), kernel.c_str(), ringclass.c_str(), &label) !=
        SR_OK)
      die_input("classify");
    StrPtr l(label);
    if (*l.get() == '\0') {
      std::cout << "no case (predict: not commutative)\n";
      return 0;
    }
    std::cout << l.get() << "\n";
    return 0;
  }

  if (verify->parsed() || census_cmd->parsed()) {
    char* report = nullptr;
    int ok = 0;
    sr_status st =
        verify->parsed()
            ? sr_verify_paper(format.c_str(), &report, &ok)
            : sr_census(max_rank, rings.c_str(), format.c_str(), &report, &ok);
    if (st != SR_OK) die_input(verify->parsed() ? "verify-paper" : "census");
    StrPtr r(report);
    emit(r.get(), out_file);
    return ok ? 0 : kExitNegative;
  }

  if (audit->parsed()) {
    GroupPtr g = load_group(group_spec);
    char* report = nullptr;
    int ok = 0;
    if (sr_audit(g.get(), kernel.c_str(), ring.c_str(), &report, &ok) != SR_OK)
      die_input("audit");
    StrPtr r(report);
    std::cout << r.get();
    return ok ? 0 : kExitNegative;
  }

  return kExitUsage;
}
