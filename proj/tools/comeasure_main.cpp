#include <stdio.h>
#include <stdlib.h>

#include "comeasure.h"

int main(int argc, char** argv) {
  cm_report* rep = NULL;
  int exit_code = 0;
  cm_status st = cm_run(argc - 1, (const char* const*)(argv + 1), &rep, &exit_code);
  if (st != CM_OK) {
    fprintf(stderr, "comeasure: %s\n", cm_last_error());
    return 2;
  }
  char* text = NULL;
  if (cm_report_render(rep, NULL, &text) == CM_OK) {
    fputs(text, stdout);
    cm_string_free(text);
  } else {
    fprintf(stderr, "comeasure: %s\n", cm_last_error());
    cm_report_free(rep);
    return 2;
  }
  cm_report_free(rep);
  return exit_code;
}
