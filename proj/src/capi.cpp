#include "posetpoly/posetpoly.h"

#include <cstring>
#include <json.hpp>
#include <new>
#include <sstream>
#include <string>

#include "posetpoly/cache.hpp"
#include "posetpoly/errors.hpp"
#include "posetpoly/expr.hpp"
#include "posetpoly/fcalc.hpp"
#include "posetpoly/io.hpp"
#include "posetpoly/suites.hpp"

struct pp_poset {
  posetpoly::Poset poset;
};

namespace {

using namespace posetpoly;

thread_local std::string g_error;
thread_local int g_line = 0;
thread_local int g_column = 0;

// Bad enum value passed across the C boundary.
struct BadArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

pp_status fail(pp_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

// Runs fn, mapping exceptions to status codes.
template <typename Fn>
pp_status guarded(Fn&& fn) {
  g_error.clear();
  g_line = g_column = 0;
  try {
    return fn();
  } catch (const UnboundRefError& e) {
    g_line = e.line();
    g_column = e.column();
    return fail(PP_ERR_UNBOUND, e.what());
  } catch (const ParseError& e) {
    g_line = e.line();
    g_column = e.column();
    return fail(PP_ERR_PARSE, e.what());
  } catch (const CycleError& e) {
    return fail(PP_ERR_INVALID, e.what());
  } catch (const DuplicateLabelError& e) {
    return fail(PP_ERR_INVALID, e.what());
  } catch (const UnknownLabelError& e) {
    return fail(PP_ERR_INVALID, e.what());
  } catch (const TooLargeError& e) {
    return fail(PP_ERR_TOO_LARGE, e.what());
  } catch (const NotInFamilyError& e) {
    return fail(PP_ERR_NOT_IN_FAMILY, e.what());
  } catch (const LeafTooLargeError& e) {
    return fail(PP_ERR_LEAF_TOO_LARGE, e.what());
  } catch (const ConfigError& e) {
    return fail(PP_ERR_CONFIG, e.what());
  } catch (const IoError& e) {
    return fail(PP_ERR_IO, e.what());
  } catch (const BadArgument& e) {
    return fail(PP_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PP_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pp_config resolve(const pp_config* cfg) {
  pp_config c;
  pp_config_default(&c);
  if (cfg) c = *cfg;
  if (pp_config_validate(&c) != PP_OK) throw ConfigError(g_error);
  return c;
}

Format format_of(const pp_config& c) { return c.format == PP_CSV ? Format::Csv : Format::Json; }
const char* format_name(const pp_config& c) { return c.format == PP_CSV ? "csv" : "json"; }

PolytopeKind kind_of(pp_kind k) {
  if (k == PP_ORDER) return PolytopeKind::Order;
  if (k == PP_CHAIN) return PolytopeKind::Chain;
  throw BadArgument("unknown polytope kind");
}

Method method_of(pp_method m, const Poset& p, int max_brute) {
  switch (m) {
    case PP_AUTO: return p.size() <= max_brute ? Method::Brute : Method::Recursive;
    case PP_BRUTE: return Method::Brute;
    case PP_RECURSIVE: return Method::Recursive;
  }
  throw BadArgument("unknown method");
}

// Looks up or computes output through the optional cache.
template <typename Fn>
std::string cached(const pp_config& c, const Poset& p, const char* command, Method method,
                   const char* kind, Fn&& compute) {
  if (!c.cache_dir || !*c.cache_dir) return compute();
  const ResultCache cache(c.cache_dir);
  const std::string key =
      cache_key(poset_to_json(p), command, method_name(method), kind, c.max_brute, format_name(c));
  if (auto hit = cache.get(key)) return *hit;
  std::string text = compute();
  cache.put(key, text);
  return text;
}

bool compare_holds(const std::string& text, Format format) {
  if (format == Format::Json) return nlohmann::json::parse(text).at("leq").get<bool>();
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.substr(line.rfind(',') + 1).starts_with("-")) return false;
  }
  return true;
}

}  // namespace

extern "C" {

void pp_config_default(pp_config* cfg) {
  if (!cfg) return;
  cfg->seed = 1;
  cfg->max_brute = 8;
  cfg->corpus_size = 200;
  cfg->workers = 0;
  cfg->format = PP_JSON;
  cfg->cache_dir = nullptr;
}

pp_status pp_config_validate(const pp_config* cfg) {
  if (!cfg) return fail(PP_ERR_ARGUMENT, "config is null");
  if (cfg->max_brute < 1 || cfg->max_brute > 12) {
    return fail(PP_ERR_CONFIG, "max-brute must be between 1 and 12");
  }
  if (cfg->corpus_size < 0 || cfg->corpus_size > 100000) {
    return fail(PP_ERR_CONFIG, "corpus-size must be between 0 and 100000");
  }
  if (cfg->workers > 1024) return fail(PP_ERR_CONFIG, "workers must be at most 1024");
  if (cfg->format != PP_JSON && cfg->format != PP_CSV) {
    return fail(PP_ERR_CONFIG, "format must be json or csv");
  }
  return PP_OK;
}

const char* pp_last_error(void) { return g_error.c_str(); }
int pp_last_error_line(void) { return g_line; }
int pp_last_error_column(void) { return g_column; }

const char* pp_version(void) {
  static const std::string v(kVersion);
  return v.c_str();
}

void pp_string_free(char* s) { std::free(s); }

pp_status pp_poset_parse(const char* expr, pp_poset** out) {
  if (!expr || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pp_poset{evaluate(std::string_view(expr))};
    return PP_OK;
  });
}

pp_status pp_poset_from_json(const char* json, pp_poset** out) {
  if (!json || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new pp_poset{poset_from_json(json)};
    return PP_OK;
  });
}

pp_status pp_poset_load(const char* text, pp_poset** out) {
  if (!text || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return looks_like_poset_json(text) ? pp_poset_from_json(text, out) : pp_poset_parse(text, out);
}

pp_status pp_poset_random(int n, uint64_t seed, double edge_prob, pp_poset** out) {
  if (!out) return fail(PP_ERR_ARGUMENT, "null argument");
  if (n < 0 || n > kMaxElements) return fail(PP_ERR_TOO_LARGE, "n must be between 0 and 64");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    return fail(PP_ERR_ARGUMENT, "edge probability must be in [0, 1]");
  }
  return guarded([&] {
    *out = new pp_poset{random_poset(n, seed, edge_prob)};
    return PP_OK;
  });
}

void pp_poset_free(pp_poset* p) { delete p; }

int pp_poset_size(const pp_poset* p) { return p ? p->poset.size() : -1; }

pp_status pp_poset_is_x_free(const pp_poset* p, int* out) {
  if (!p || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = is_x_free(p->poset) ? 1 : 0;
    return PP_OK;
  });
}

pp_status pp_poset_to_json(const pp_poset* p, char** out) {
  if (!p || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(poset_to_json(p->poset));
    return PP_OK;
  });
}

pp_status pp_fvector(const pp_poset* p, pp_kind kind, pp_method method, int max_brute,
                     uint64_t* coeffs, size_t cap, size_t* len) {
  if (!p || !len || (cap > 0 && !coeffs)) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (max_brute < 1 || max_brute > 12) throw ConfigError("max-brute must be between 1 and 12");
    const FPoly f =
        f_vector(p->poset, kind_of(kind), method_of(method, p->poset, max_brute), max_brute);
    *len = f.coeffs().size();
    for (std::size_t k = 0; k < std::min(cap, *len); ++k) coeffs[k] = f[k];
    return PP_OK;
  });
}

pp_status pp_describe(const pp_poset* p, const pp_config* cfg, char** out) {
  if (!p || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const pp_config c = resolve(cfg);
    *out = dup_string(describe_report(p->poset, format_of(c)));
    return PP_OK;
  });
}

pp_status pp_fvector_report(const pp_poset* p, pp_kind kind, pp_method method,
                            const pp_config* cfg, char** out) {
  if (!p || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const pp_config c = resolve(cfg);
    const PolytopeKind k = kind_of(kind);
    const Method m = method_of(method, p->poset, c.max_brute);
    *out = dup_string(cached(c, p->poset, "fvector", m, kind_name(k), [&] {
      return fvector_report(p->poset, k, m, f_vector(p->poset, k, m, c.max_brute), format_of(c));
    }));
    return PP_OK;
  });
}

pp_status pp_compare(const pp_poset* p, pp_method method, const pp_config* cfg, char** out,
                     int* holds) {
  if (!p || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const pp_config c = resolve(cfg);
    const Method m = method_of(method, p->poset, c.max_brute);
    const std::string text = cached(c, p->poset, "compare", m, "both", [&] {
      if (m == Method::Brute) return compare_report(verify_main_theorem_brute(p->poset), format_of(c));
      auto tree = in_family(p->poset);
      if (!tree) throw NotInFamilyError("poset has no decomposition into X-free pieces");
      return compare_report(verify_main_theorem(*tree, c.max_brute), format_of(c));
    });
    if (holds) *holds = compare_holds(text, format_of(c)) ? 1 : 0;
    *out = dup_string(text);
    return PP_OK;
  });
}

pp_status pp_decompose(const pp_poset* p, char** out, int* in_family_out) {
  if (!p || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    if (in_family_out) *in_family_out = in_family(p->poset).has_value() ? 1 : 0;
    *out = dup_string(decompose_report(p->poset));
    return PP_OK;
  });
}

pp_status pp_export(const pp_poset* p, pp_kind kind, pp_export_what what, char** out) {
  if (!p || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    ExportWhat w;
    switch (what) {
      case PP_VREP: w = ExportWhat::VRep; break;
      case PP_HREP: w = ExportWhat::HRep; break;
      case PP_FACES: w = ExportWhat::Faces; break;
      default: throw BadArgument("unknown export target");
    }
    *out = dup_string(export_polytope(p->poset, kind_of(kind), w));
    return PP_OK;
  });
}

const char* const* pp_suite_names(void) {
  static const std::vector<const char*> names = [] {
    std::vector<const char*> v;
    for (const auto& s : suite_names()) v.push_back(s.c_str());
    v.push_back(nullptr);
    return v;
  }();
  return names.data();
}

pp_status pp_verify(const char* suite, const pp_config* cfg, char** out, int* passed) {
  if (!suite || !out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const pp_config c = resolve(cfg);
    SuiteConfig sc;
    sc.seed = c.seed;
    sc.corpus_size = c.corpus_size;
    sc.max_brute = c.max_brute;
    sc.workers = c.workers;
    const SuiteResult r = run_suite(suite, sc);
    if (passed) *passed = r.passed() ? 1 : 0;
    *out = dup_string(suite_report(r, format_of(c)));
    return PP_OK;
  });
}

pp_status pp_corpus(const pp_config* cfg, char** out) {
  if (!out) return fail(PP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const pp_config c = resolve(cfg);
    SuiteConfig sc;
    sc.seed = c.seed;
    sc.corpus_size = c.corpus_size;
    *out = dup_string(corpus_report(sc, format_of(c)));
    return PP_OK;
  });
}

}  // extern "C"
