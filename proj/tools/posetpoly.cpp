// Command-line front end. Talks to the library only through posetpoly.h.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "posetpoly/posetpoly.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string expr;
  std::string file;
  std::string kind = "order";
  std::string method = "auto";
  std::string format = "json";
  std::string cache;
  std::string suite;
  std::string what;
  uint64_t seed = 1;
  int corpus_size = 200;
  int max_brute = 8;
  unsigned workers = 0;
};

struct Owned {
  char* s = nullptr;
  ~Owned() { pp_string_free(s); }
};

struct PosetHandle {
  pp_poset* p = nullptr;
  ~PosetHandle() { pp_poset_free(p); }
};

int report_error(pp_status s) {
  std::cerr << "posetpoly: error: " << pp_last_error() << "\n";
  (void)s;
  return kExitUsage;
}

pp_config make_config(const Options& o) {
  pp_config c;
  pp_config_default(&c);
  c.seed = o.seed;
  c.corpus_size = o.corpus_size;
  c.max_brute = o.max_brute;
  c.workers = o.workers;
  c.format = o.format == "csv" ? PP_CSV : PP_JSON;
  c.cache_dir = o.cache.empty() ? nullptr : o.cache.c_str();
  return c;
}

// Loads the poset named by --expr or --file into h.
pp_status load(const Options& o, PosetHandle& h) {
  if (!o.expr.empty()) return pp_poset_parse(o.expr.c_str(), &h.p);
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    std::cerr << "posetpoly: error: cannot read " << o.file << "\n";
    return PP_ERR_IO;
  }
  std::ostringstream os;
  os << in.rdbuf();
  return pp_poset_load(os.str().c_str(), &h.p);
}

void add_input(CLI::App* cmd, Options& o) {
  auto* e = cmd->add_option("--expr", o.expr, "poset expression");
  auto* f = cmd->add_option("--file", o.file, "file with an expression or poset JSON");
  e->excludes(f);
  f->excludes(e);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--max-brute", o.max_brute, "largest leaf enumerated directly")
      ->check(CLI::Range(1, 12));
}

void add_corpus(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "corpus seed");
  cmd->add_option("--corpus-size", o.corpus_size, "random posets in the corpus")
      ->check(CLI::Range(0, 100000));
  cmd->add_option("--workers", o.workers, "worker threads, 0 for one per core");
}

void add_kind(CLI::App* cmd, Options& o) {
  cmd->add_option("--kind", o.kind, "polytope")->check(CLI::IsMember({"order", "chain"}));
}

void add_method(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "brute, recursive, or auto")
      ->check(CLI::IsMember({"auto", "brute", "recursive"}));
}

void add_cache(CLI::App* cmd, Options& o) {
  cmd->add_option("--cache", o.cache, "result cache directory")->envname("POSETPOLY_CACHE");
}

pp_kind kind_of(const Options& o) { return o.kind == "chain" ? PP_CHAIN : PP_ORDER; }

pp_method method_of(const Options& o) {
  if (o.method == "brute") return PP_BRUTE;
  if (o.method == "recursive") return PP_RECURSIVE;
  return PP_AUTO;
}

bool has_input(const Options& o) {
  if (o.expr.empty() && o.file.empty()) {
    std::cerr << "posetpoly: error: --expr or --file is required\n";
    return false;
  }
  return true;
}

int emit(pp_status s, const Owned& text, int code_on_ok) {
  if (s != PP_OK) return report_error(s);
  std::fputs(text.s, stdout);
  return code_on_ok;
}

int run(const std::string& command, const Options& o) {
  const pp_config cfg = make_config(o);
  if (pp_config_validate(&cfg) != PP_OK) return report_error(PP_ERR_CONFIG);

  if (command == "verify") {
    Owned text;
    int passed = 0;
    const pp_status s = pp_verify(o.suite.c_str(), &cfg, &text.s, &passed);
    return emit(s, text, passed ? kExitPass : kExitFail);
  }
  if (command == "corpus") {
    Owned text;
    return emit(pp_corpus(&cfg, &text.s), text, kExitPass);
  }

  if (!has_input(o)) return kExitUsage;
  PosetHandle h;
  if (pp_status s = load(o, h); s != PP_OK) {
    return s == PP_ERR_IO ? kExitUsage : report_error(s);
  }
  Owned text;
  if (command == "describe") return emit(pp_describe(h.p, &cfg, &text.s), text, kExitPass);
  if (command == "fvector") {
    return emit(pp_fvector_report(h.p, kind_of(o), method_of(o), &cfg, &text.s), text, kExitPass);
  }
  if (command == "compare") {
    int holds = 0;
    const pp_status s = pp_compare(h.p, method_of(o), &cfg, &text.s, &holds);
    return emit(s, text, holds ? kExitPass : kExitFail);
  }
  if (command == "decompose") {
    int member = 0;
    const pp_status s = pp_decompose(h.p, &text.s, &member);
    return emit(s, text, member ? kExitPass : kExitFail);
  }
  if (command == "export") {
    static const std::map<std::string, pp_export_what> what = {
        {"vrep", PP_VREP}, {"hrep", PP_HREP}, {"faces", PP_FACES}};
    return emit(pp_export(h.p, kind_of(o), what.at(o.what), &text.s), text, kExitPass);
  }
  std::cerr << "posetpoly: error: unknown command " << command << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order and chain polytopes of finite posets"};
  app.set_version_flag("--version", std::string(pp_version()));
  app.require_subcommand(1);
  Options o;

  auto* describe = app.add_subcommand("describe", "element, chain and facet counts");
  add_input(describe, o);
  add_common(describe, o);

  auto* fvector = app.add_subcommand("fvector", "f-vector of O(P) or C(P)");
  add_input(fvector, o);
  add_common(fvector, o);
  add_kind(fvector, o);
  add_method(fvector, o);
  add_cache(fvector, o);

  auto* compare = app.add_subcommand("compare", "f-vectors of both polytopes and f_O <= f_C");
  add_input(compare, o);
  add_common(compare, o);
  add_method(compare, o);
  add_cache(compare, o);

  auto* verify = app.add_subcommand("verify", "run a property suite over the corpus");
  std::vector<std::string> suites;
  for (const char* const* s = pp_suite_names(); *s; ++s) suites.emplace_back(*s);
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suites));
  add_common(verify, o);
  add_corpus(verify, o);

  auto* decompose = app.add_subcommand("decompose", "decomposition into X-free pieces");
  add_input(decompose, o);

  auto* corpus = app.add_subcommand("corpus", "list the test corpus");
  add_common(corpus, o);
  add_corpus(corpus, o);

  auto* exporter = app.add_subcommand("export", "vertices, facets or faces as JSON");
  add_input(exporter, o);
  add_kind(exporter, o);
  exporter->add_option("--what", o.what, "vrep, hrep or faces")
      ->required()
      ->check(CLI::IsMember({"vrep", "hrep", "faces"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return run(app.get_subcommands().front()->get_name(), o);
}
