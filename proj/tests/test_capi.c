/* Plain C client of the shared library. */

#define _DEFAULT_SOURCE
#include <dirent.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include <unistd.h>

#include "posetpoly/posetpoly.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: EXPECT(%s) failed\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static const char* kX = "{a, b, c, d, e; a < c, b < c, c < d, c < e}";

static void test_parse_and_errors(void) {
  pp_poset* p = NULL;
  EXPECT(pp_poset_parse(kX, &p) == PP_OK);
  EXPECT(pp_poset_size(p) == 5);
  int xf = -1;
  EXPECT(pp_poset_is_x_free(p, &xf) == PP_OK && xf == 0);
  char* json = NULL;
  EXPECT(pp_poset_to_json(p, &json) == PP_OK);
  EXPECT(strcmp(json, "{\"labels\":[\"a\",\"b\",\"c\",\"d\",\"e\"],\"covers\":[[\"a\",\"c\"],[\"b\",\"c\"],[\"c\",\"d\"],[\"c\",\"e\"]]}") == 0);

  pp_poset* q = NULL;
  EXPECT(pp_poset_load(json, &q) == PP_OK);
  EXPECT(pp_poset_size(q) == 5);
  pp_poset_free(q);
  pp_string_free(json);
  pp_poset_free(p);

  p = NULL;
  EXPECT(pp_poset_parse("chain(2) <\n  @", &p) == PP_ERR_PARSE);
  EXPECT(p == NULL);
  EXPECT(pp_last_error_line() == 2);
  EXPECT(pp_last_error_column() == 3);
  EXPECT(strlen(pp_last_error()) > 0);
  EXPECT(pp_poset_parse("v < chain(1)", &p) == PP_ERR_UNBOUND);
  EXPECT(pp_poset_parse("{a, b; a < b, b < a}", &p) == PP_ERR_INVALID);
  EXPECT(pp_poset_parse("antichain(65)", &p) == PP_ERR_PARSE);
  EXPECT(pp_poset_parse(NULL, &p) == PP_ERR_ARGUMENT);
  EXPECT(pp_poset_from_json("{", &p) == PP_ERR_PARSE);
  pp_poset_free(NULL);
}

static void test_fvector(void) {
  pp_poset* p = NULL;
  EXPECT(pp_poset_parse(kX, &p) == PP_OK);
  uint64_t f[16];
  size_t len = 0;
  static const uint64_t fo[] = {1, 8, 24, 34, 24, 8, 1};
  static const uint64_t fc[] = {1, 8, 24, 35, 26, 9, 1};
  EXPECT(pp_fvector(p, PP_ORDER, PP_BRUTE, 8, f, 16, &len) == PP_OK);
  EXPECT(len == 7 && memcmp(f, fo, sizeof fo) == 0);
  EXPECT(pp_fvector(p, PP_CHAIN, PP_RECURSIVE, 8, f, 16, &len) == PP_OK);
  EXPECT(len == 7 && memcmp(f, fc, sizeof fc) == 0);
  EXPECT(pp_fvector(p, PP_CHAIN, PP_AUTO, 8, f, 2, &len) == PP_OK);
  EXPECT(len == 7 && f[1] == 8);
  EXPECT(pp_fvector(p, (pp_kind)7, PP_AUTO, 8, f, 16, &len) == PP_ERR_ARGUMENT);
  pp_poset_free(p);

  EXPECT(pp_poset_parse("{a,b,c,d,e,f; a<c, b<c, c<d, c<e, f<d}", &p) == PP_OK);
  EXPECT(pp_fvector(p, PP_ORDER, PP_RECURSIVE, 8, f, 16, &len) == PP_ERR_NOT_IN_FAMILY);
  char* out = NULL;
  int in_family = -1;
  EXPECT(pp_decompose(p, &out, &in_family) == PP_OK);
  EXPECT(in_family == 0);
  EXPECT(strstr(out, "NotInFamily") != NULL);
  pp_string_free(out);
  pp_poset_free(p);

  EXPECT(pp_poset_parse("chain(9)", &p) == PP_OK);
  EXPECT(pp_fvector(p, PP_ORDER, PP_RECURSIVE, 4, f, 16, &len) == PP_OK);
  EXPECT(len == 11 && f[1] == 10);
  pp_poset_free(p);

  /* A 9-element X-free leaf that does not split. */
  EXPECT(pp_poset_parse("{a,b,c,d,e,f,g,h,i; a<b, c<b, c<d, e<d, e<f, g<f, g<h, i<h}", &p) == PP_OK);
  EXPECT(pp_fvector(p, PP_ORDER, PP_RECURSIVE, 8, f, 16, &len) == PP_ERR_LEAF_TOO_LARGE);
  pp_poset_free(p);
}

static void test_reports(void) {
  pp_config cfg;
  pp_config_default(&cfg);
  EXPECT(cfg.seed == 1 && cfg.max_brute == 8 && cfg.corpus_size == 200 && cfg.cache_dir == NULL);
  EXPECT(pp_config_validate(&cfg) == PP_OK);

  pp_poset* p = NULL;
  EXPECT(pp_poset_parse(kX, &p) == PP_OK);
  char* out = NULL;
  int holds = -1;
  EXPECT(pp_compare(p, PP_AUTO, &cfg, &out, &holds) == PP_OK);
  EXPECT(holds == 1);
  EXPECT(strstr(out, "\"fC\":[1,8,24,35,26,9,1]") != NULL);
  pp_string_free(out);

  EXPECT(pp_describe(p, NULL, &out) == PP_OK);
  EXPECT(strstr(out, "\"x_free\":false") != NULL);
  pp_string_free(out);

  cfg.format = PP_CSV;
  EXPECT(pp_fvector_report(p, PP_ORDER, PP_BRUTE, &cfg, &out) == PP_OK);
  EXPECT(strncmp(out, "degree,dim,count\n", 17) == 0);
  pp_string_free(out);

  EXPECT(pp_export(p, PP_CHAIN, PP_HREP, &out) == PP_OK);
  EXPECT(strstr(out, "\"rows\"") != NULL);
  pp_string_free(out);
  EXPECT(pp_export(p, PP_ORDER, PP_FACES, &out) == PP_OK);
  EXPECT(strstr(out, "{\"dim\": -1, \"vertices\": []}") != NULL);
  pp_string_free(out);
  pp_poset_free(p);

  pp_config bad;
  pp_config_default(&bad);
  bad.max_brute = 0;
  EXPECT(pp_config_validate(&bad) == PP_ERR_CONFIG);
  bad.max_brute = 13;
  EXPECT(pp_config_validate(&bad) == PP_ERR_CONFIG);
  pp_config_default(&bad);
  bad.corpus_size = -1;
  EXPECT(pp_config_validate(&bad) == PP_ERR_CONFIG);
}

static void test_cache(void) {
  char dir[] = "/tmp/posetpoly-capi-XXXXXX";
  EXPECT(mkdtemp(dir) != NULL);
  pp_config cfg;
  pp_config_default(&cfg);
  cfg.cache_dir = dir;
  pp_poset* p = NULL;
  EXPECT(pp_poset_parse(kX, &p) == PP_OK);
  char* first = NULL;
  char* second = NULL;
  int holds = 0;
  EXPECT(pp_compare(p, PP_BRUTE, &cfg, &first, &holds) == PP_OK);
  EXPECT(pp_compare(p, PP_BRUTE, &cfg, &second, &holds) == PP_OK);
  EXPECT(holds == 1);
  EXPECT(strcmp(first, second) == 0);
  pp_string_free(first);
  pp_string_free(second);

  DIR* d = opendir(dir);
  int entries = 0;
  struct dirent* e;
  while (d != NULL && (e = readdir(d)) != NULL) {
    if (e->d_name[0] == '.') continue;
    ++entries;
    char path[512];
    snprintf(path, sizeof path, "%s/%s", dir, e->d_name);
    remove(path);
  }
  if (d != NULL) closedir(d);
  rmdir(dir);
  EXPECT(entries == 1);
  pp_poset_free(p);
}

static void test_verify(void) {
  const char* const* names = pp_suite_names();
  int count = 0;
  while (names[count] != NULL) ++count;
  EXPECT(count == 8);

  pp_config cfg;
  pp_config_default(&cfg);
  cfg.corpus_size = 10;
  char* out = NULL;
  int passed = -1;
  EXPECT(pp_verify("main-theorem", &cfg, &out, &passed) == PP_OK);
  EXPECT(passed == 1);
  EXPECT(strstr(out, "\"suite\":\"main-theorem\"") != NULL);
  pp_string_free(out);
  EXPECT(pp_verify("bogus", &cfg, &out, &passed) == PP_ERR_CONFIG);

  char* a = NULL;
  char* b = NULL;
  EXPECT(pp_corpus(&cfg, &a) == PP_OK);
  EXPECT(pp_corpus(&cfg, &b) == PP_OK);
  EXPECT(strcmp(a, b) == 0);
  pp_string_free(a);
  pp_string_free(b);
}

int main(void) {
  EXPECT(strcmp(pp_version(), "0.1.0") == 0);
  test_parse_and_errors();
  test_fvector();
  test_reports();
  test_cache();
  test_verify();
  if (failures == 0) printf("test_capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
