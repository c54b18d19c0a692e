#include <stdio.h>
#include <string.h>
#include "shiftedkeys.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, sk_last_error()); return 1; } } while (0)

int main(void) {
    SkPoly *q = NULL, *p = NULL, *two_p = NULL, *two = NULL;
    CHECK(sk_poly_eval("qkey 0,3,1,2", &q) == SK_STATUS_OK);
    CHECK(sk_basis_eval("pkey", "3,4,1,3", &p) == SK_STATUS_OK);
    CHECK(sk_poly_parse("4", &two) == SK_STATUS_OK);
    CHECK(sk_poly_mul(p, two, &two_p) == SK_STATUS_OK);
    /* Q-key of 0312 is 4 times the P-key of 3413 */
    CHECK(sk_poly_equal(q, two_p) == 1);

    char *s = NULL;
    CHECK(sk_poly_to_string(q, &s) == SK_STATUS_OK);
    printf("%s\n", s);
    sk_string_free(s);

    SkExpansion *e = NULL;
    CHECK(sk_expand(q, "key", &e) == SK_STATUS_OK);
    CHECK(sk_expansion_is_positive(e) == 1);
    CHECK(sk_expansion_len(e) >= 1);
    sk_expansion_free(e);

    SkPoly *bad = NULL;
    CHECK(sk_poly_parse("x1 +", &bad) == SK_STATUS_PARSE);
    CHECK(strlen(sk_last_error()) > 0);
    CHECK(sk_poly_equal(NULL, q) == -1);

    sk_poly_free(q);
    sk_poly_free(p);
    sk_poly_free(two);
    sk_poly_free(two_p);
    printf("ok %s\n", sk_version());
    return 0;
}
