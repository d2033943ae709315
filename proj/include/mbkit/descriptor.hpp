#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mbkit/cell_model.hpp"
#include "mbkit/errors.hpp"
#include "mbkit/homology.hpp"
#include "mbkit/intpoly.hpp"

namespace mbkit {

// Homology data supplied in one of two interchangeable forms: a cell model
// to compute from, or the (possibly twisted) Poincare polynomial directly
// for spaces the user does not wish to triangulate. At most one form is set.
struct TopologyData {
  std::optional<IntPolynomial> polynomial;
  std::optional<CellModel> cell_model;

  bool present() const {
    return polynomial.has_value() || cell_model.has_value();
  }

  friend bool operator==(const TopologyData& a, const TopologyData& b) {
    return a.polynomial == b.polynomial && a.cell_model == b.cell_model;
  }
};

// One connected component of the critical set. For interior components the
// index is the rank of the negative normal bundle; for boundary components
// it is the index within the boundary restriction. orientation_system is the
// monodromy of the negative bundle's orientation local system over the cell
// model (trivial when the bundle is oriented); when topology is given as a
// bare polynomial, that polynomial is already the twisted one and the system
// must stay trivial.
struct CriticalSubmanifold {
  std::string name;
  std::size_t dim = 0;
  std::size_t index = 0;
  TopologyData topology;
  SignCocycle orientation_system;
  bool oriented_bundle = true;

  friend bool operator==(const CriticalSubmanifold& a,
                         const CriticalSubmanifold& b) {
    return a.name == b.name && a.dim == b.dim && a.index == b.index &&
           a.topology == b.topology &&
           a.orientation_system == b.orientation_system &&
           a.oriented_bundle == b.oriented_bundle;
  }
};

// Critical data of a function on a compact manifold with boundary, split
// into interior components and the two classes of boundary components: type
// N (downhill direction points inward; these feed the type-N counting
// polynomial) and type D (excluded there, counted with an extra degree shift
// in the type-D polynomial). The descriptor asserts the smooth-geometry
// facts; only their algebraic consequences are checked downstream.
struct MorseBottDescriptor {
  std::string name;
  std::size_t ambient_dim = 0;
  bool manifold_oriented = false;
  TopologyData manifold_homology;
  TopologyData relative_homology;
  std::vector<CriticalSubmanifold> interior;
  std::vector<CriticalSubmanifold> boundary_N;
  std::vector<CriticalSubmanifold> boundary_D;

  friend bool operator==(const MorseBottDescriptor& a,
                         const MorseBottDescriptor& b) {
    return a.name == b.name && a.ambient_dim == b.ambient_dim &&
           a.manifold_oriented == b.manifold_oriented &&
           a.manifold_homology == b.manifold_homology &&
           a.relative_homology == b.relative_homology &&
           a.interior == b.interior && a.boundary_N == b.boundary_N &&
           a.boundary_D == b.boundary_D;
  }
};

namespace detail {

inline void validate_submanifold(const CriticalSubmanifold& c,
                                 const std::string& where, std::size_t m,
                                 bool interior,
                                 std::vector<std::string>& out) {
  const std::size_t ceiling = interior ? m : m - 1;
  const std::string label = where + " '" + c.name + "'";
  if (interior ? c.dim >= m : c.dim > m - 1)
    out.push_back(label + ": dim " + std::to_string(c.dim) +
                  (interior ? " must be below the ambient dimension "
                            : " exceeds the boundary dimension ") +
                  std::to_string(interior ? m : m - 1));
  else if (c.index > ceiling - c.dim)
    out.push_back(label + ": index exceeds m - dim (index " +
                  std::to_string(c.index) + ", bound " +
                  std::to_string(ceiling - c.dim) + ")");
  if (c.topology.polynomial && c.topology.cell_model)
    out.push_back(label + ": topology must be a polynomial or a cell model, "
                          "not both");
  if (!c.orientation_system.is_trivial()) {
    if (!c.topology.cell_model)
      out.push_back(label +
                    ": orientation_system requires a cell model topology");
    else if (auto bad = c.orientation_system.first_violation(
                 *c.topology.cell_model))
      out.push_back(label + ": " + *bad);
    if (c.oriented_bundle)
      out.push_back(label + ": oriented_bundle is set but orientation_system "
                            "is nontrivial");
  }
}

}  // namespace detail

// Structural validation. Violations are data, not exceptions: the list is
// empty exactly when the descriptor is well formed. Every message names the
// offending field and the bound breached.
inline std::vector<std::string> validate(const MorseBottDescriptor& d) {
  std::vector<std::string> out;
  const std::size_t m = d.ambient_dim;

  if (m == 0 && !(d.boundary_N.empty() && d.boundary_D.empty()))
    out.push_back("ambient_dim 0 admits no boundary submanifolds");

  if (d.interior.empty() && d.boundary_N.empty() && d.boundary_D.empty())
    out.push_back(
        "critical set is empty: a function on a compact manifold has at "
        "least one critical submanifold");

  std::set<std::string> seen;
  auto check_names = [&](const std::vector<CriticalSubmanifold>& list) {
    for (const auto& c : list)
      if (!seen.insert(c.name).second)
        out.push_back("name collision: '" + c.name +
                      "' appears more than once");
  };
  check_names(d.interior);
  check_names(d.boundary_N);
  check_names(d.boundary_D);

  if (m > 0) {
    for (const auto& c : d.interior)
      detail::validate_submanifold(c, "interior", m, true, out);
    for (const auto& c : d.boundary_N)
      detail::validate_submanifold(c, "boundary_N", m, false, out);
    for (const auto& c : d.boundary_D)
      detail::validate_submanifold(c, "boundary_D", m, false, out);
  }

  if (d.manifold_homology.polynomial && d.manifold_homology.cell_model)
    out.push_back(
        "manifold_homology must be a polynomial or a cell model, not both");
  if (d.relative_homology.polynomial && d.relative_homology.cell_model)
    out.push_back(
        "relative_homology must be a polynomial or a cell model, not both");

  // Connectedness is checkable only when a model is supplied; a bare
  // polynomial is taken on trust.
  if (d.manifold_homology.cell_model) {
    HomologyProfile h = homology_profile(*d.manifold_homology.cell_model);
    if (h.degrees.empty() || h.degrees[0].free_rank != 1)
      out.push_back("manifold_homology: cell model is not connected");
  }
  return out;
}

// Critical data of the negated function: interior indices flip to
// m - dim - index, and the two boundary classes swap with indices flipping
// to (m-1) - dim - index. Defined only in the fully oriented case, because
// the flipped bundle's orientation system for an unoriented bundle is
// independent data this descriptor does not carry.
inline MorseBottDescriptor negate(const MorseBottDescriptor& d) {
  if (!d.manifold_oriented)
    throw input_error("negate: manifold must be oriented");
  auto all_oriented = [](const std::vector<CriticalSubmanifold>& list) {
    for (const auto& c : list)
      if (!c.oriented_bundle) return false;
    return true;
  };
  if (!all_oriented(d.interior) || !all_oriented(d.boundary_N) ||
      !all_oriented(d.boundary_D))
    throw input_error(
        "negate: every critical submanifold must have an oriented negative "
        "bundle");

  const std::size_t m = d.ambient_dim;
  MorseBottDescriptor out = d;
  for (auto& c : out.interior) c.index = m - c.dim - c.index;
  out.boundary_N = d.boundary_D;
  out.boundary_D = d.boundary_N;
  for (auto& c : out.boundary_N) c.index = (m - 1) - c.dim - c.index;
  for (auto& c : out.boundary_D) c.index = (m - 1) - c.dim - c.index;
  return out;
}

}  // namespace mbkit
