#include <stdio.h>
#include <string.h>

#include "theta_hecke.h"

int main(void) {
    ThAlgebra *alg = NULL;
    if (th_algebra_new(2, &alg) != TH_STATUS_OK) return 1;
    char *out = NULL;
    if (th_eval(alg, "(T[1] + 1)*(T[1] - v)", &out) != TH_STATUS_OK) return 2;
    if (strcmp(out, "0") != 0) return 3;
    th_string_free(out);
    if (th_eval(alg, "T[", &out) != TH_STATUS_PARSE_ERROR) return 4;
    if (th_last_error() == NULL) return 5;
    th_algebra_free(alg);
    if (th_springer_matrix_json(3, NULL, &out) != TH_STATUS_OK) return 6;
    puts(out);
    th_string_free(out);
    return 0;
}
