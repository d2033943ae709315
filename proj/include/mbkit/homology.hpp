#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mbkit/cell_model.hpp"
#include "mbkit/errors.hpp"
#include "mbkit/intpoly.hpp"
#include "mbkit/matrix.hpp"

namespace mbkit {

struct DegreeHomology {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, ascending

  friend bool operator==(const DegreeHomology& a, const DegreeHomology& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

// Homology groups per degree, 0 through the top dimension of the complex.
struct HomologyProfile {
  std::vector<DegreeHomology> degrees;

  // Free ranks as a polynomial: coefficient of t^k is rank H_k.
  IntPolynomial poincare() const {
    std::vector<Int> c(degrees.size());
    for (std::size_t k = 0; k < degrees.size(); ++k)
      c[k] = Int(degrees[k].free_rank);
    return IntPolynomial(std::move(c));
  }

  bool torsion_free() const {
    for (const auto& d : degrees)
      if (!d.torsion.empty()) return false;
    return true;
  }

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    return a.degrees == b.degrees;
  }
};

// Boundary matrices of the chain complex of `model` with coefficients in the
// rank-one local system described by `twist`. Entry convention: a k-simplex
// [v0 < ... < vk] carries the fiber coordinate at its least vertex; dropping
// vertex i contributes (-1)^i, and dropping v0 additionally transports the
// coordinate across the edge (v0, v1), contributing the factor
// twist.sign(v0, v1). The returned vector has one matrix per degree 0..dim;
// index k maps degree-k chains to degree-(k-1) chains, with index 0 the
// empty map out of the vertices.
inline std::vector<IntegerMatrix> boundary_matrices(
    const CellModel& model, const SignCocycle& twist = SignCocycle()) {
  if (model.empty()) throw input_error("empty cell model");
  if (auto bad = twist.first_violation(model)) throw input_error(*bad);

  const std::size_t dim = model.dimension();
  std::vector<IntegerMatrix> bd;
  bd.reserve(dim + 1);
  bd.emplace_back(0, model.simplex_count(0));

  std::vector<std::vector<int>> below = model.simplices(0);
  for (std::size_t k = 1; k <= dim; ++k) {
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t i = 0; i < below.size(); ++i) row_of[below[i]] = i;

    std::vector<std::vector<int>> gens = model.simplices(k);
    IntegerMatrix d(below.size(), gens.size());
    std::vector<int> face(k);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& s = gens[j];
      for (std::size_t skip = 0; skip <= k; ++skip) {
        face.clear();
        for (std::size_t i = 0; i <= k; ++i)
          if (i != skip) face.push_back(s[i]);
        Int coeff = (skip % 2 == 0) ? 1 : -1;
        if (skip == 0) coeff *= twist.sign(s[0], s[1]);
        d(row_of.at(face), j) += coeff;
      }
    }
    bd.push_back(std::move(d));
    below = std::move(gens);
  }
  return bd;
}

// Homology of an abstract chain complex given by the ranks of its chain
// groups and its boundary maps; boundaries[k] must be a ranks[k-1] x
// ranks[k] matrix (boundaries[0] has zero rows). Degree k gets free rank
// ranks[k] - rank d_k - rank d_{k+1} and its torsion is the set of invariant
// factors of d_{k+1} exceeding 1.
inline HomologyProfile homology_of_complex(
    const std::vector<std::size_t>& ranks,
    const std::vector<IntegerMatrix>& boundaries) {
  if (boundaries.size() != ranks.size())
    throw input_error("one boundary matrix per degree is required");
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (boundaries[k].cols() != ranks[k] ||
        boundaries[k].rows() != (k == 0 ? 0 : ranks[k - 1]))
      throw input_error("boundary matrix shape mismatch in degree " +
                        std::to_string(k));
  }

  std::vector<SmithNormalForm> snf;
  snf.reserve(boundaries.size());
  for (const auto& d : boundaries) snf.push_back(smith_normal_form(d));

  HomologyProfile profile;
  profile.degrees.resize(ranks.size());
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    std::size_t r_in = k + 1 < ranks.size() ? snf[k + 1].rank : 0;
    if (snf[k].rank + r_in > ranks[k])
      throw input_error("boundary ranks exceed the chain rank in degree " +
                        std::to_string(k) + "; not a chain complex");
    profile.degrees[k].free_rank = ranks[k] - snf[k].rank - r_in;
    if (k + 1 < ranks.size())
      for (const Int& d : snf[k + 1].elementary_divisors)
        if (d > 1) profile.degrees[k].torsion.push_back(d);
  }
  return profile;
}

inline HomologyProfile homology_profile(
    const CellModel& model, const SignCocycle& twist = SignCocycle()) {
  std::vector<IntegerMatrix> bd = boundary_matrices(model, twist);
  std::vector<std::size_t> ranks(bd.size());
  for (std::size_t k = 0; k < bd.size(); ++k) ranks[k] = bd[k].cols();
  return homology_of_complex(ranks, bd);
}

inline IntPolynomial poincare_polynomial(
    const CellModel& model, const SignCocycle& twist = SignCocycle()) {
  return homology_profile(model, twist).poincare();
}

// For a model of a closed oriented dim-manifold the untwisted free ranks
// must satisfy rank H_k = rank H_{dim-k}, i.e. the free-rank polynomial
// equals its own reversal capped at dim. Models of manifolds with boundary
// fail this, as does a cap below the top nonzero rank.
inline bool poincare_duality_check(const CellModel& model, std::size_t dim) {
  IntPolynomial p = poincare_polynomial(model);
  if (p.degree() > static_cast<long>(dim)) return false;
  return p == reverse(p, dim);
}

}  // namespace mbkit
