#pragma once

#include "inell/numerics.hpp"
#include "inell/parallelogram.hpp"

namespace inell {

// Derivative-free reference minimizers. They read b^2/a^2 off the family
// conics (quadratic-part ratio, extended precision) and never touch the
// closed-form optimal parameters they are used to check.

/// Maximizer of b^2/a^2 over the inscribed family, searched on (eps k, (1 - eps) k).
MinimizeResult oracle_v_epsilon(const Parallelogram& p);

/// Maximizer of b^2/a^2 over the circumscribed family. For rectangles the
/// search interval is (0, 16); otherwise (0, k^2/d^2) shrunk by eps.
MinimizeResult oracle_u_star(const Parallelogram& p);

}  // namespace inell
