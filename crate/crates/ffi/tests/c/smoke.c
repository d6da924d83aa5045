#include <stdio.h>
#include <string.h>

#include "quivercone.h"

int main(void) {
  NcqSession *s = NULL;
  const char *src = "quiver Q { vertices: v; arrows: a: v -> v; }\n"
                    "quiver D = double(Q);\n"
                    "algebra P = preproj(D);\n"
                    "preprojform P;\n";
  if (ncq_session_parse(src, -1, NULL, &s) != NCQ_STATUS_OK) {
    fprintf(stderr, "parse: %s\n", ncq_last_error_message());
    return 1;
  }
  char *json = NULL;
  if (ncq_session_run(s, &json) != NCQ_STATUS_OK) {
    fprintf(stderr, "run: %s\n", ncq_last_error_message());
    return 1;
  }
  int ok = strstr(json, "\"preprojective\":true") != NULL;
  ncq_string_free(json);
  ncq_session_free(s);

  NcqQuiver *q = ncq_quiver_new();
  ncq_quiver_add_vertex(q, "v");
  ncq_quiver_add_arrow(q, "a", "v", "v");
  NcqQuiver *d = NULL;
  ncq_quiver_double(q, &d);
  uint64_t dims[1] = {1};
  int64_t count = -1;
  NcqStatus st = ncq_cb_arrow_count(d, dims, 1, 0, 0, &count);
  ncq_quiver_free(d);
  ncq_quiver_free(q);
  if (!ok || st != NCQ_STATUS_OK || count != 2) {
    fprintf(stderr, "unexpected result\n");
    return 1;
  }
  printf("ok\n");
  return 0;
}
