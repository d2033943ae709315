#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbkit/descriptor.hpp"
#include "mbkit/errors.hpp"
#include "mbkit/homology.hpp"
#include "mbkit/intpoly.hpp"

namespace mbkit {

// Outcome of certifying one factorization claim: lhs must equal (1+t) times
// a polynomial with nonnegative coefficients. verdict is pass exactly when
// exact_division and nonnegative both hold, and then (1+t)*quotient == lhs.
// Failures are data, not exceptions: exhibiting critical data that cannot
// arise from any function of the modeled kind is a supported use.
struct VerificationReport {
  std::string descriptor_name;
  std::string theorem;  // "main" or "corollary"
  IntPolynomial lhs;
  IntPolynomial quotient;
  bool exact_division = false;
  bool nonnegative = false;
  std::string failure_detail;

  bool pass() const { return exact_division && nonnegative; }
  std::string verdict() const { return pass() ? "pass" : "fail"; }
};

inline void require_valid(const MorseBottDescriptor& d) {
  std::vector<std::string> violations = validate(d);
  if (violations.empty()) return;
  std::string msg = "invalid descriptor '" + d.name + "': ";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) msg += "; ";
    msg += violations[i];
  }
  throw input_error(msg);
}

// Twisted Poincare polynomial of one critical submanifold: the explicit
// polynomial when given (already twisted by convention), otherwise computed
// from the cell model with the orientation system as coefficients.
inline IntPolynomial submanifold_poincare(const CriticalSubmanifold& c) {
  if (c.topology.polynomial) return *c.topology.polynomial;
  if (c.topology.cell_model)
    return poincare_polynomial(*c.topology.cell_model, c.orientation_system);
  throw input_error("submanifold '" + c.name + "' has no topology data");
}

inline IntPolynomial manifold_poincare(const MorseBottDescriptor& d) {
  if (d.manifold_homology.polynomial) return *d.manifold_homology.polynomial;
  if (d.manifold_homology.cell_model)
    return poincare_polynomial(*d.manifold_homology.cell_model);
  throw input_error("descriptor '" + d.name +
                    "' carries no manifold homology data");
}

// Absolute homology of the pair (M, boundary): supplied directly, or derived
// by duality as the reversal of the manifold's polynomial at the ambient
// dimension, which is valid exactly when M is oriented.
inline IntPolynomial relative_poincare(const MorseBottDescriptor& d) {
  if (d.relative_homology.polynomial) return *d.relative_homology.polynomial;
  if (d.relative_homology.cell_model)
    return poincare_polynomial(*d.relative_homology.cell_model);
  if (!d.manifold_oriented)
    throw input_error(
        "descriptor '" + d.name +
        "': relative homology is missing and cannot be derived by duality "
        "because the manifold is not oriented");
  return reverse(manifold_poincare(d), d.ambient_dim);
}

// Type-N counting polynomial: interior submanifolds contribute their twisted
// Poincare polynomial shifted by the index, type-N boundary submanifolds
// likewise, type-D submanifolds contribute nothing.
inline IntPolynomial mb_polynomial_N(const MorseBottDescriptor& d) {
  require_valid(d);
  IntPolynomial acc;
  for (const auto& c : d.interior)
    acc += submanifold_poincare(c).shifted(c.index);
  for (const auto& c : d.boundary_N)
    acc += submanifold_poincare(c).shifted(c.index);
  return acc;
}

// Type-D counting polynomial: interior terms as above, type-D boundary
// submanifolds shifted by index + 1, type-N contributes nothing.
inline IntPolynomial mb_polynomial_D(const MorseBottDescriptor& d) {
  require_valid(d);
  IntPolynomial acc;
  for (const auto& c : d.interior)
    acc += submanifold_poincare(c).shifted(c.index);
  for (const auto& c : d.boundary_D)
    acc += submanifold_poincare(c).shifted(c.index + 1);
  return acc;
}

namespace detail {

inline VerificationReport certify_factorization(std::string descriptor_name,
                                                std::string theorem,
                                                IntPolynomial lhs) {
  VerificationReport r;
  r.descriptor_name = std::move(descriptor_name);
  r.theorem = std::move(theorem);
  r.lhs = std::move(lhs);
  DivisionResult div = divide_by_one_plus_t(r.lhs);
  r.exact_division = div.exact;
  if (!div.exact) {
    r.failure_detail = "division inexact: lhs evaluated at t = -1 gives " +
                       r.lhs.evaluate(Int(-1)).str() + ", not 0";
    return r;
  }
  r.quotient = std::move(div.quotient);
  r.nonnegative = r.quotient.is_nonnegative();
  if (!r.nonnegative) {
    for (std::size_t k = 0; k < r.quotient.coefficients().size(); ++k)
      if (r.quotient.coefficient(k) < 0) {
        r.failure_detail = "negative quotient coefficient " +
                           r.quotient.coefficient(k).str() + " at degree " +
                           std::to_string(k);
        break;
      }
  }
  return r;
}

}  // namespace detail

// Certify that the type-N counting polynomial dominates the manifold's
// homology in the factorization sense: their difference is (1+t) times a
// nonnegative polynomial.
inline VerificationReport verify_main(const MorseBottDescriptor& d) {
  require_valid(d);
  IntPolynomial lhs = mb_polynomial_N(d) - manifold_poincare(d);
  return detail::certify_factorization(d.name, "main", std::move(lhs));
}

// Oriented-case companion: the type-D counting polynomial against the
// homology of the pair (M, boundary).
inline VerificationReport verify_corollary(const MorseBottDescriptor& d) {
  require_valid(d);
  if (!d.manifold_oriented)
    throw input_error("descriptor '" + d.name +
                      "': the corollary check requires an oriented manifold");
  for (const auto* list : {&d.interior, &d.boundary_N, &d.boundary_D})
    for (const auto& c : *list)
      if (!c.oriented_bundle)
        throw input_error(
            "descriptor '" + d.name + "': the corollary check requires an "
            "oriented negative bundle on '" + c.name + "'");
  IntPolynomial lhs = mb_polynomial_D(d) - relative_poincare(d);
  return detail::certify_factorization(d.name, "corollary", std::move(lhs));
}

// Consistency of the negation bridge between the two counting polynomials:
// the type-N polynomial of the negated data must equal the reversal of the
// type-D polynomial at the ambient dimension.
inline bool cross_check_negation(const MorseBottDescriptor& d) {
  require_valid(d);
  MorseBottDescriptor neg = negate(d);
  return mb_polynomial_N(neg) == reverse(mb_polynomial_D(d), d.ambient_dim);
}

}  // namespace mbkit
