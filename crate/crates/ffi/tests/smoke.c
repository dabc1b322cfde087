/* Minimal consumer of the generated header: parse, map, inspect, free.
 * Exits 0 when every check passes. */

#include <stdio.h>
#include <string.h>

#include "fishburn.h"

static int failures = 0;

#define CHECK(cond)                                                       \
    do {                                                                  \
        if (!(cond)) {                                                    \
            fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            failures++;                                                   \
        }                                                                 \
    } while (0)

int main(void) {
    FbnPermutation *perm = NULL;
    CHECK(fbn_perm_parse("8 5 2 3 1 6 4 7", &perm) == FBN_STATUS_OK);
    CHECK(fbn_perm_len(perm) == 8);

    bool contains = true;
    CHECK(fbn_perm_contains_pattern(perm, &contains) == FBN_STATUS_OK);
    CHECK(!contains);

    FbnSequence *seq = NULL;
    CHECK(fbn_map_perm_to_seq(perm, &seq) == FBN_STATUS_OK);
    char *text = NULL;
    CHECK(fbn_seq_format(seq, &text) == FBN_STATUS_OK);
    CHECK(strcmp(text, "0 1 1 0 2 1 0 3") == 0);
    fbn_string_free(text);

    FbnMatrix *image = NULL;
    CHECK(fbn_map_perm_to_matrix(perm, &image) == FBN_STATUS_OK);
    CHECK(fbn_matrix_dim(image) == 4);
    CHECK(fbn_matrix_weight(image) == 8);

    FbnPermutation *back = NULL;
    CHECK(fbn_map_matrix_to_perm(image, &back) == FBN_STATUS_OK);
    CHECK(fbn_perm_format(back, &text) == FBN_STATUS_OK);
    CHECK(strcmp(text, "8 5 2 3 1 6 4 7") == 0);
    fbn_string_free(text);

    char *number = NULL;
    CHECK(fbn_fishburn_number(8, &number) == FBN_STATUS_OK);
    CHECK(strcmp(number, "5335") == 0);
    fbn_string_free(number);

    FbnPermutation *bad = NULL;
    CHECK(fbn_perm_parse("1 x", &bad) == FBN_STATUS_PARSE);
    CHECK(bad == NULL);
    CHECK(fbn_last_error_message() != NULL);

    fbn_perm_free(perm);
    fbn_perm_free(back);
    fbn_seq_free(seq);
    fbn_matrix_free(image);

    if (failures == 0) {
        printf("c smoke: ok\n");
        return 0;
    }
    fprintf(stderr, "c smoke: %d failures\n", failures);
    return 1;
}
