#pragma once

namespace fracalg {

/// Gamma function via the Lanczos approximation (g = 7, nine coefficients),
/// with the reflection formula for x < 0.5. Relative error is below 1e-13
/// on [1e-3, 200].
double gamma_fn(double x);

}  // namespace fracalg
