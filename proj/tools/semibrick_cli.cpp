// Command-line front end. Talks to the library only through the C interface.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semibrick/semibrick.h"

namespace {

constexpr int kExitUsage = 1;

// Raised with the exit code to return; the message goes to stderr.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail_status(sb_status s) { throw Failure{static_cast<int>(s), sb_last_error()}; }

void check(sb_status s) {
  if (s != SB_OK) fail_status(s);
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using QuiverPtr = std::unique_ptr<sb_quiver, Deleter<sb_quiver, sb_quiver_free>>;
using RepPtr = std::unique_ptr<sb_rep, Deleter<sb_rep, sb_rep_free>>;
using ListPtr = std::unique_ptr<sb_replist, Deleter<sb_replist, sb_replist_free>>;
using ReportPtr = std::unique_ptr<sb_report, Deleter<sb_report, sb_report_free>>;

struct Args {
  std::string quiver;
  std::string field = "Q";
  std::string left, right, module, base;
  std::vector<std::string> semibrick;
  std::size_t levels = 1;
  std::optional<std::uint64_t> seed;
  bool assume_brick = false;
  std::string json_out;
};

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.find(".json") != std::string::npos;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Existence of every path argument is checked before any computation.
void check_paths(const Args& a) {
  std::vector<std::string> all = {a.quiver, a.left, a.right, a.module, a.base};
  all.insert(all.end(), a.semibrick.begin(), a.semibrick.end());
  for (const auto& p : all)
    if (!p.empty() && looks_like_path(p) && !std::filesystem::exists(p)) throw Failure{kExitUsage, "no such file: " + p};
  if (!a.json_out.empty()) {
    auto parent = std::filesystem::path(a.json_out).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent))
      throw Failure{kExitUsage, "output directory does not exist: " + parent.string()};
  }
}

QuiverPtr load_quiver(const Args& a) {
  if (a.quiver.empty()) return nullptr;
  sb_quiver* q = nullptr;
  if (std::filesystem::exists(a.quiver) && std::filesystem::is_regular_file(a.quiver))
    check(sb_quiver_parse(read_file(a.quiver).c_str(), &q));
  else
    check(sb_quiver_builtin(a.quiver.c_str(), &q));
  return QuiverPtr(q);
}

RepPtr load_rep(const Args& a, const QuiverPtr& q, const std::string& spec, const char* flag) {
  if (spec.empty()) throw Failure{kExitUsage, std::string("missing ") + flag};
  sb_rep* r = nullptr;
  if (std::filesystem::is_regular_file(spec)) {
    check(sb_rep_parse(read_file(spec).c_str(), &r));
  } else {
    if (!q) throw Failure{kExitUsage, std::string(flag) + " " + spec + " is not a file; builtin names need --quiver"};
    check(sb_rep_builtin(q.get(), a.field.c_str(), spec.c_str(), &r));
  }
  return RepPtr(r);
}

ListPtr load_members(const Args& a, const QuiverPtr& q) {
  if (a.semibrick.empty()) throw Failure{kExitUsage, "missing --semibrick"};
  sb_replist* l = nullptr;
  check(sb_replist_new(&l));
  ListPtr list(l);
  for (const auto& spec : a.semibrick) {
    if (std::filesystem::is_regular_file(spec)) {
      check(sb_replist_append_document(list.get(), read_file(spec).c_str()));
    } else {
      auto r = load_rep(a, q, spec, "--semibrick");
      check(sb_replist_push(list.get(), r.get()));
    }
  }
  return list;
}

std::size_t budget_from_env() {
  const char* env = std::getenv("SEMIBRICK_BUDGET");
  sb_options defaults;
  sb_options_init(&defaults);
  if (!env || !*env) return defaults.budget;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v == 0) throw std::invalid_argument("budget");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Failure{kExitUsage, std::string("SEMIBRICK_BUDGET must be a positive integer, got \"") + env + "\""};
  }
}

sb_options options_of(const Args& a) {
  sb_options o;
  sb_options_init(&o);
  o.assume_brick = a.assume_brick ? 1 : 0;
  o.levels = a.levels;
  o.budget = budget_from_env();
  if (a.seed) {
    o.has_seed = 1;
    o.seed = *a.seed;
  }
  return o;
}

std::size_t kronecker_arrows(const Args& a) {
  const std::string name = a.quiver.empty() ? "k3" : a.quiver;
  if (name.size() < 2 || (name[0] != 'k' && name[0] != 'K'))
    throw Failure{kExitUsage, "demo-kronecker needs --quiver k<r>"};
  try {
    std::size_t pos = 0;
    const unsigned long r = std::stoul(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument("r");
    return r;
  } catch (const std::exception&) {
    throw Failure{kExitUsage, "demo-kronecker needs --quiver k<r>"};
  }
}

ReportPtr run(const std::string& cmd, const Args& a) {
  check_paths(a);
  const sb_options opts = options_of(a);
  sb_report* out = nullptr;
  if (cmd == "demo-kronecker") {
    check(sb_cmd_demo_kronecker(kronecker_arrows(a), a.field.c_str(), &out));
    return ReportPtr(out);
  }
  auto q = load_quiver(a);
  if (cmd == "hom" || cmd == "ext" || cmd == "euler") {
    auto l = load_rep(a, q, a.left, "--left");
    auto r = load_rep(a, q, a.right, "--right");
    auto f = cmd == "hom" ? sb_cmd_hom : cmd == "ext" ? sb_cmd_ext : sb_cmd_euler;
    check(f(l.get(), r.get(), &out));
  } else if (cmd == "defect" || cmd == "brick") {
    auto m = load_rep(a, q, a.module, "--module");
    check((cmd == "defect" ? sb_cmd_defect : sb_cmd_brick)(m.get(), &out));
  } else if (cmd == "semibrick") {
    auto members = load_members(a, q);
    check(sb_cmd_semibrick(members.get(), &opts, &out));
  } else if (cmd == "socle" || cmd == "filtration" || cmd == "membership") {
    auto m = load_rep(a, q, a.module, "--module");
    auto members = load_members(a, q);
    auto f = cmd == "socle" ? sb_cmd_socle : cmd == "filtration" ? sb_cmd_filtration : sb_cmd_membership;
    check(f(m.get(), members.get(), &opts, &out));
  } else {
    auto base = load_rep(a, q, a.base, "--base");
    auto members = load_members(a, q);
    auto f = cmd == "universal"   ? sb_cmd_universal
             : cmd == "tower"     ? sb_cmd_tower
             : cmd == "endtower"  ? sb_cmd_endtower
             : cmd == "uniserial" ? sb_cmd_uniserial
                                  : sb_cmd_preproj;
    check(f(base.get(), members.get(), &opts, &out));
  }
  return ReportPtr(out);
}

struct Spec {
  const char* name;
  const char* help;
  bool pair, module, base, members, levels;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hom/Ext, semi-brick, filtration and universal-extension computations for quiver representations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sb_version()));

  const Spec specs[] = {
      {"hom", "basis and dimension of Hom(left, right)", true, false, false, false, false},
      {"ext", "basis and dimension of Ext(left, right)", true, false, false, false, false},
      {"euler", "Euler form of the dimension vectors against dim Hom - dim Ext", true, false, false, false, false},
      {"defect", "defect of a module over a tame quiver", false, true, false, false, false},
      {"brick", "brick certification", false, true, false, false, false},
      {"semibrick", "semi-brick certification with Hom and Ext tables", false, false, false, true, false},
      {"socle", "X-socle of a module", false, true, false, true, false},
      {"filtration", "X-socle filtration of a module", false, true, false, true, false},
      {"membership", "membership in Filt(X) with a verified witness", false, true, false, true, false},
      {"universal", "X-universal short exact sequence starting at the base", false, false, true, true, false},
      {"tower", "truncated Pruefer tower Y(1) ... Y(r)", false, false, true, true, true},
      {"endtower", "endomorphism-ring tower with restriction maps", false, false, true, true, true},
      {"uniserial", "uniseriality of the tower subquotients", false, false, true, true, true},
      {"preproj", "defect -1 preprojective tower diagnostics", false, false, true, true, true},
      {"demo-kronecker", "bricks X_0 .. X_4 on K_r with their Hom and Ext tables", false, false, false, false, false},
  };

  Args args;
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--quiver", args.quiver, "builtin quiver (k<r>, a<n>) or quiver document");
    sub->add_option("--field", args.field, "Q or a prime p")->capture_default_str();
    sub->add_option("--json", args.json_out, "write the JSON report to this path");
    if (s.pair) {
      sub->add_option("--left", args.left, "builtin name or rep document")->required();
      sub->add_option("--right", args.right, "builtin name or rep document")->required();
    }
    if (s.module) sub->add_option("--module", args.module, "builtin name or rep document")->required();
    if (s.base) {
      sub->add_option("--base", args.base, "builtin name or rep document")->required();
      sub->add_option("--seed", args.seed, "randomize the Ext bases with this seed");
    }
    if (s.members) {
      sub->add_option("--semibrick", args.semibrick, "members: builtin names or rep/semibrick documents")
          ->required()
          ->delimiter(',');
      sub->add_flag("--assume-brick", args.assume_brick, "accept members whose brick property is not certified");
    }
    if (s.levels) sub->add_option("--levels", args.levels, "number of tower levels")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    auto report = run(cmd, args);
    std::cout << sb_report_text(report.get());
    if (!args.json_out.empty()) {
      std::ofstream out(args.json_out, std::ios::binary);
      if (!out) throw Failure{kExitUsage, "cannot write " + args.json_out};
      out << sb_report_json(report.get());
    }
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
}
