#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mbkit/counting.hpp"
#include "mbkit/descriptor.hpp"
#include "mbkit/errors.hpp"
#include "mbkit/intpoly.hpp"

namespace mbkit {

// Critical-point counts of a chosen Morse function on one submanifold:
// counts[k] is the number of index-k points. Must be admissible for the
// submanifold it is attached to (see resolve_choices).
using MorseVector = std::vector<long long>;

using ChoiceMap = std::map<std::string, MorseVector>;

// Critical-point bookkeeping of the perturbed function: for each ambient
// degree n, how many of its critical points are interior, type N, and type
// D. All three sequences have length ambient_dim + 1.
struct MorseDescriptor {
  std::vector<long long> interior;
  std::vector<long long> type_N;
  std::vector<long long> type_D;

  bool empty() const {
    for (const auto* v : {&interior, &type_N, &type_D})
      for (long long c : *v)
        if (c != 0) return false;
    return true;
  }
};

inline IntPolynomial counts_polynomial(const MorseVector& v) {
  std::vector<Int> c(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) c[k] = Int(v[k]);
  return IntPolynomial(std::move(c));
}

// One submanifold with its Morse choice fixed: the choice's counting
// polynomial and the surplus quotient of the admissibility division
// (counts - twisted Poincare polynomial) / (1 + t).
struct ResolvedChoice {
  const CriticalSubmanifold* sub = nullptr;
  MorseVector counts;
  IntPolynomial counting;  // counts as a polynomial
  IntPolynomial surplus;   // nonnegative quotient certifying admissibility
};

struct ResolvedChoices {
  std::vector<ResolvedChoice> interior;
  std::vector<ResolvedChoice> boundary_N;
  std::vector<ResolvedChoice> boundary_D;
};

namespace detail {

inline ResolvedChoice resolve_one(const CriticalSubmanifold& c,
                                  const ChoiceMap& choices) {
  ResolvedChoice out;
  out.sub = &c;
  auto it = choices.find(c.name);
  if (it != choices.end()) {
    out.counts = it->second;
  } else if (c.topology.cell_model) {
    // Default: one critical point per cell, the discrete stand-in for a
    // perfect-enough Morse function on the triangulated submanifold.
    const CellModel& model = *c.topology.cell_model;
    for (std::size_t k = 0; k <= model.dimension(); ++k)
      out.counts.push_back(static_cast<long long>(model.simplex_count(k)));
  } else {
    throw input_error("no Morse choice given for '" + c.name +
                      "' and no cell model to default from");
  }

  while (!out.counts.empty() && out.counts.back() == 0)
    out.counts.pop_back();

  long long total = 0;
  for (long long n : out.counts) {
    if (n < 0)
      throw input_error("Morse choice for '" + c.name +
                        "' has a negative count");
    total += n;
  }
  if (total <= 0)
    throw input_error("Morse choice for '" + c.name +
                      "' has no critical points");
  if (out.counts.size() > c.dim + 1)
    throw input_error("Morse choice for '" + c.name + "' has counts above "
                      "the submanifold dimension " + std::to_string(c.dim));

  out.counting = counts_polynomial(out.counts);
  IntPolynomial defect = out.counting - submanifold_poincare(c);
  DivisionResult div = divide_by_one_plus_t(defect);
  if (!div.exact)
    throw input_error(
        "Morse choice for '" + c.name + "' is inadmissible: the counting "
        "defect " + defect.str() + " is not divisible by 1 + t (remainder " +
        defect.evaluate(Int(-1)).str() + " at t = -1)");
  for (std::size_t k = 0; k < div.quotient.coefficients().size(); ++k)
    if (div.quotient.coefficient(k) < 0)
      throw input_error(
          "Morse choice for '" + c.name + "' is inadmissible: surplus "
          "quotient coefficient at degree " + std::to_string(k) + " is " +
          div.quotient.coefficient(k).str());
  out.surplus = std::move(div.quotient);
  return out;
}

}  // namespace detail

// Fix a Morse choice for every critical submanifold: explicit choices by
// name, cell counts as the default, and the admissibility gate (counting
// defect divisible by 1+t with nonnegative quotient) enforced on each.
inline ResolvedChoices resolve_choices(const MorseBottDescriptor& d,
                                       const ChoiceMap& choices = {}) {
  require_valid(d);
  for (const auto& [name, ignored] : choices) {
    bool known = false;
    for (const auto* list : {&d.interior, &d.boundary_N, &d.boundary_D})
      for (const auto& c : *list)
        if (c.name == name) known = true;
    if (!known)
      throw input_error("choices name '" + name +
                        "' matches no critical submanifold");
  }
  ResolvedChoices out;
  for (const auto& c : d.interior)
    out.interior.push_back(detail::resolve_one(c, choices));
  for (const auto& c : d.boundary_N)
    out.boundary_N.push_back(detail::resolve_one(c, choices));
  for (const auto& c : d.boundary_D)
    out.boundary_D.push_back(detail::resolve_one(c, choices));
  return out;
}

// Replace each submanifold by its chosen Morse critical points: a point of
// index k on a submanifold of index i lands in ambient degree i + k.
inline MorseDescriptor morsify(const MorseBottDescriptor& d,
                               const ChoiceMap& choices = {}) {
  ResolvedChoices rc = resolve_choices(d, choices);
  MorseDescriptor md;
  md.interior.assign(d.ambient_dim + 1, 0);
  md.type_N.assign(d.ambient_dim + 1, 0);
  md.type_D.assign(d.ambient_dim + 1, 0);
  auto spread = [&](const std::vector<ResolvedChoice>& list,
                    std::vector<long long>& into) {
    for (const auto& r : list)
      for (std::size_t k = 0; k < r.counts.size(); ++k)
        into.at(r.sub->index + k) += r.counts[k];
  };
  spread(rc.interior, md.interior);
  spread(rc.boundary_N, md.type_N);
  spread(rc.boundary_D, md.type_D);
  return md;
}

// Type-N Morse counting polynomial of the perturbed function: interior and
// type-N points counted by ambient degree.
inline IntPolynomial morse_counting_N(const MorseDescriptor& md) {
  std::size_t n = md.interior.size() > md.type_N.size() ? md.interior.size()
                                                        : md.type_N.size();
  std::vector<Int> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k < md.interior.size()) c[k] += Int(md.interior[k]);
    if (k < md.type_N.size()) c[k] += Int(md.type_N[k]);
  }
  return IntPolynomial(std::move(c));
}

// The per-degree bookkeeping must agree with the index-shifted sum of the
// per-submanifold counting polynomials. Both sides are assembled from the
// same resolved choices; this equality pins the degree bookkeeping down.
inline bool check_counting_identity(const MorseBottDescriptor& d,
                                    const ChoiceMap& choices = {}) {
  ResolvedChoices rc = resolve_choices(d, choices);
  IntPolynomial lhs = morse_counting_N(morsify(d, choices));
  IntPolynomial rhs;
  for (const auto& r : rc.interior) rhs += r.counting.shifted(r.sub->index);
  for (const auto& r : rc.boundary_N) rhs += r.counting.shifted(r.sub->index);
  return lhs == rhs;
}

// Certification through the perturbed function, with the decomposition of
// its surplus. base is the factorization report for
// morse_counting_N - P_t(M); r_h its quotient; corrections the index-shifted
// sum of the per-submanifold admissibility quotients; difference their
// difference, which equals the quotient verify_main computes directly. The
// verdict is based on the difference, since that is the quantity the
// factorization claim needs to be nonnegative.
struct MorsificationReport {
  VerificationReport base;
  IntPolynomial r_h;
  IntPolynomial corrections;
  IntPolynomial difference;
};

inline MorsificationReport verify_main_via_morsification(
    const MorseBottDescriptor& d, const ChoiceMap& choices = {}) {
  ResolvedChoices rc = resolve_choices(d, choices);
  MorsificationReport out;
  IntPolynomial lhs = morse_counting_N(morsify(d, choices)) -
                      manifold_poincare(d);
  out.base =
      detail::certify_factorization(d.name, "main", std::move(lhs));
  if (!out.base.exact_division) return out;

  out.r_h = out.base.quotient;
  for (const auto& r : rc.interior)
    out.corrections += r.surplus.shifted(r.sub->index);
  for (const auto& r : rc.boundary_N)
    out.corrections += r.surplus.shifted(r.sub->index);
  out.difference = out.r_h - out.corrections;

  out.base.quotient = out.difference;
  out.base.nonnegative = out.difference.is_nonnegative();
  if (!out.base.nonnegative)
    out.base.failure_detail =
        "surplus difference has a negative coefficient: " +
        out.difference.str();
  else
    out.base.failure_detail.clear();
  return out;
}

}  // namespace mbkit
