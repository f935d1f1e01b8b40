/* Plain-C consumer of the shared library: proves the header compiles as C
 * and the symbols carry C linkage. */
#include <qmag/qmag.h>

#include <math.h>
#include <stdio.h>

int main(void) {
  const double mu[3] = {0.0, 0.0, 1.0};
  qmag_model *model = NULL;
  if (qmag_model_create(mu, 1.0, &model) != QMAG_OK) {
    fprintf(stderr, "model creation failed: %s\n", qmag_last_error());
    return 1;
  }

  qmag_static_report st;
  if (qmag_static_report_closed(model, &st) != QMAG_OK)
    return 1;
  if (fabs(st.energy + 0.021164545311413657) > 1e-12)
    return 1;
  if (fabs(st.h1 + 2.0 * st.h0) > 1e-18)
    return 1;

  double daw = 0.0;
  if (qmag_dawson(2.0, &daw) != QMAG_OK)
    return 1;
  if (fabs(daw - 0.3013403889237920) > 1e-12)
    return 1;

  qmag_dynamic_report dyn;
  if (qmag_dynamic_report_closed(model, 2.1, &dyn) != QMAG_OK)
    return 1;
  if (!(dyn.photons > 2.0 * st.photons)) /* overshoot near the peak */
    return 1;

  qmag_model_free(model);
  printf("c smoke test ok\n");
  return 0;
}
