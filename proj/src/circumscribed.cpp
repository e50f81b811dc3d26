#include "inell/circumscribed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "inell/errors.hpp"
#include "inell/inscribed.hpp"

namespace inell {

namespace {

constexpr double kE2Tol = 1e-9;
constexpr double kAlgebraicTol = 1e-9;

}  // namespace

std::string to_string(BiellipticCondition c) {
  switch (c) {
    case BiellipticCondition::none:
      return "none";
    case BiellipticCondition::diagonal_or_side_oq:
      return "OR^2=2*OQ^2";
    case BiellipticCondition::diagonal_or_side_op:
      return "OR^2=2*OP^2";
  }
  return "none";
}

double circumscribed_upper_bound(const Parallelogram& p) {
  if (p.d == 0) return std::numeric_limits<double>::infinity();
  return (p.k * p.k) / (p.d * p.d);
}

CircumscribedEllipse circumscribed_conic(const Parallelogram& p, double u) {
  const double upper = circumscribed_upper_bound(p);
  if (!(u > 0 && u < upper)) {
    std::ostringstream msg;
    msg << "circumscribed family parameter u = " << u << " outside (0, " << upper << ")";
    throw ParameterOutOfRange(msg.str());
  }
  const auto c = circumscribed_coefficients(p.l, p.k, p.d, u);
  CircumscribedEllipse ell;
  ell.u = u;
  ell.conic = {c[0], c[1], c[2], c[3], c[4], c[5]};
  if (!is_ellipse(ell.conic))
    throw InternalError("circumscribed family member is not an ellipse at u = " + std::to_string(u));
  ell.geometry = geometry(ell.conic);
  return ell;
}

double u_star(const Parallelogram& p) {
  const double k2 = p.k * p.k;
  return k2 / (k2 + 2 * p.d * p.d);
}

CircumscribedEllipse minimal_eccentricity_circumellipse(const Parallelogram& p) {
  return circumscribed_conic(p, u_star(p));
}

double minimal_circumscribed_e2(const Parallelogram& p) {
  return 2 * p.d / (std::hypot(p.d, p.k) + p.d);
}

double vertex_incidence_residual(const CircumscribedEllipse& ell, const Parallelogram& p) {
  double worst = 0;
  for (const Vec2& q : p.canonical_vertices()) worst = std::max(worst, relative_residual(ell.conic, q));
  return worst;
}

BiellipticConditionValues bielliptic_condition_values(const Parallelogram& p) {
  const double l = p.l, k = p.k, d = p.d;
  BiellipticConditionValues r;
  r.diagonal_or_side_oq = k * k + d * d - 2 * d * l - l * l;
  r.diagonal_or_side_op = k * k + d * d + 2 * d * l - l * l;
  r.spurious = 2 * d * d + k * k - 2 * d * std::hypot(d, k);
  return r;
}

BiellipticVerdict bielliptic_verdict(const Parallelogram& p) {
  const DiagonalInvariants inv = diagonal_invariants(p);
  const double tol = kAlgebraicTol * inv.J;

  BiellipticVerdict r;
  r.e2_inscribed = minimal_inscribed_e2(p);
  r.e2_circumscribed = minimal_circumscribed_e2(p);
  r.values = bielliptic_condition_values(p);
  if (std::abs(r.values.spurious) < tol)
    throw InternalError("degenerate bielliptic factor vanished with k > 0");

  if (std::abs(r.values.diagonal_or_side_op) < tol)
    r.matched_condition = BiellipticCondition::diagonal_or_side_op;
  else if (std::abs(r.values.diagonal_or_side_oq) < tol)
    r.matched_condition = BiellipticCondition::diagonal_or_side_oq;

  const std::array<std::pair<const char*, double>, 2> diagonals{{{"OR", inv.G}, {"PQ", inv.H}}};
  const std::array<std::pair<const char*, double>, 2> sides{
      {{"OP", p.side_op_sq()}, {"OQ", p.side_oq_sq()}}};
  for (const auto& [dn, dsq] : diagonals) {
    for (const auto& [sn, ssq] : sides) {
      if (!r.diagonal_side_witness && std::abs(dsq - 2 * ssq) < tol)
        r.diagonal_side_witness = LengthWitness{dn, sn, dsq, ssq};
    }
  }

  const bool by_e2 = std::abs(r.e2_inscribed - r.e2_circumscribed) < kE2Tol;
  const bool by_condition = r.matched_condition != BiellipticCondition::none;
  const bool by_witness = r.diagonal_side_witness.has_value();
  if (by_e2 != by_condition || by_condition != by_witness) {
    std::ostringstream msg;
    msg << "inconsistent bielliptic verdict for l = " << p.l << ", k = " << p.k << ", d = " << p.d
        << ": e2 route " << by_e2 << ", condition route " << by_condition << ", witness route "
        << by_witness << " (|de2| = " << std::abs(r.e2_inscribed - r.e2_circumscribed) << ")";
    throw InternalError(msg.str());
  }
  r.is_bielliptic = by_e2;
  return r;
}

}  // namespace inell
