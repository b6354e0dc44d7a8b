#include <stdio.h>
#include <string.h>

#include "ssr.h"

#define CHECK(cond)                                                    \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__,    \
                    #cond, ssr_last_error());                          \
            return 1;                                                  \
        }                                                              \
    } while (0)

int main(void) {
    SsrRepr *cubics = NULL;
    CHECK(ssr_construct("BinaryCubics", NULL, "Q", &cubics) == SSR_STATUS_OK);
    CHECK(ssr_repr_dim(cubics) == 4);
    CHECK(ssr_repr_algebra_dim(cubics) == 3);

    SsrReport *rep = NULL;
    CHECK(ssr_decompose(cubics, "[1,0,0,1]", NULL, &rep) == SSR_STATUS_OK);
    CHECK(ssr_report_passed(rep));
    char *json = ssr_report_json(rep);
    CHECK(json != NULL && strstr(json, "\"q\":\"-3/1\"") != NULL);
    ssr_string_free(json);
    ssr_report_free(rep);

    rep = NULL;
    CHECK(ssr_decompose(cubics, "[1,0]", NULL, &rep) == SSR_STATUS_INVALID_INPUT);
    CHECK(rep == NULL);
    CHECK(strlen(ssr_last_error()) > 0);

    char *text = ssr_repr_to_json(cubics);
    SsrRepr *again = NULL;
    CHECK(ssr_repr_from_json(text, "F7", &again) == SSR_STATUS_INVALID_INPUT);
    CHECK(ssr_repr_from_json(text, NULL, &again) == SSR_STATUS_OK);
    ssr_string_free(text);

    CHECK(ssr_chart(again, "alpha", "1", "{\"P\":[1,0,0,1],\"z\":3}", NULL, &rep) == SSR_STATUS_OK);
    json = ssr_report_json(rep);
    CHECK(strstr(json, "\"h\":\"1/1\"") != NULL);
    ssr_string_free(json);
    ssr_report_free(rep);

    ssr_repr_free(again);
    ssr_repr_free(cubics);
    printf("ok %s\n", ssr_version());
    return 0;
}
