/* Minimal C consumer of the gal C ABI.
 *
 * Build (from the workspace root, after `cargo build -p gal-ffi --release`):
 *
 *   cc -I crates/gal-ffi/include crates/gal-ffi/examples/smoke.c \
 *      target/release/libgal_ffi.a -lm -o gal_smoke
 */
#include <assert.h>
#include <math.h>
#include <stdio.h>

#include "gal.h"

int main(void) {
    GalGraph *g = NULL;
    GalStatus st = gal_graph_parse("p gal 5\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\n", &g);
    if (st != GAL_STATUS_OK) {
        fprintf(stderr, "parse failed: %s\n", gal_last_error_message());
        return 1;
    }

    uint64_t a = 0;
    assert(gal_alpha(g, &a) == GAL_STATUS_OK && a == 2);

    double value = 0, gap = 0;
    assert(gal_theta(g, GAL_THETA_VARIANT_LOVASZ, 0.0, &value, &gap) == GAL_STATUS_OK);
    assert(fabs(value - sqrt(5.0)) < 1e-6);

    char *star = NULL;
    assert(gal_alpha_star(g, &star) == GAL_STATUS_OK);
    printf("alpha = %llu, theta = %.7f (gap %.1e), alpha* = %s\n",
           (unsigned long long)a, value, gap, star);
    gal_string_free(star);

    GalGraph *square = NULL;
    assert(gal_graph_strong_product(g, g, &square) == GAL_STATUS_OK);
    assert(gal_alpha(square, &a) == GAL_STATUS_OK && a == 5);
    printf("alpha of the strong square = %llu\n", (unsigned long long)a);

    gal_graph_free(square);
    gal_graph_free(g);
    return 0;
}
