#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mbkit/errors.hpp"

namespace mbkit {

namespace detail {

inline std::string simplex_str(const std::vector<int>& s) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ",";
    out << s[i];
  }
  out << "]";
  return out.str();
}

}  // namespace detail

// Finite simplicial complex on integer-labelled vertices. Simplices are
// stored as strictly increasing vertex lists and the complex is closed under
// faces by construction: adding a simplex inserts every face down to the
// vertices. Within each dimension the generator order is the lexicographic
// order of the vertex lists, which fixes the bases of all chain groups.
class CellModel {
 public:
  void add_vertex(int v) { vertices_.insert(v); }

  // Insert a simplex given by distinct vertices (any order) together with
  // all of its faces.
  void add_simplex(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
      throw input_error("simplex with repeated vertex: " +
                        detail::simplex_str(verts));
    if (verts.empty()) throw input_error("empty simplex");
    insert_closed(verts);
  }

  bool empty() const { return vertices_.empty(); }

  // Top dimension present (0 for a nonempty complex of isolated vertices).
  // Calling this on an empty complex is an input error.
  std::size_t dimension() const {
    if (empty()) throw input_error("empty cell model has no dimension");
    return by_dim_.empty() ? 0 : by_dim_.rbegin()->first;
  }

  std::size_t simplex_count(std::size_t dim) const {
    if (dim == 0) return vertices_.size();
    auto it = by_dim_.find(dim);
    return it == by_dim_.end() ? 0 : it->second.size();
  }

  // Generators of the dimension-k chain group in basis order. Dimension 0
  // lists each vertex as a singleton.
  std::vector<std::vector<int>> simplices(std::size_t dim) const {
    std::vector<std::vector<int>> out;
    if (dim == 0) {
      out.reserve(vertices_.size());
      for (int v : vertices_) out.push_back({v});
      return out;
    }
    auto it = by_dim_.find(dim);
    if (it == by_dim_.end()) return out;
    out.assign(it->second.begin(), it->second.end());
    return out;
  }

  bool has_simplex(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    if (verts.size() == 1) return vertices_.count(verts[0]) > 0;
    auto it = by_dim_.find(verts.size() - 1);
    return it != by_dim_.end() && it->second.count(verts) > 0;
  }

  const std::set<int>& vertices() const { return vertices_; }

  friend bool operator==(const CellModel& a, const CellModel& b) {
    return a.vertices_ == b.vertices_ && a.by_dim_ == b.by_dim_;
  }

 private:
  void insert_closed(const std::vector<int>& verts) {
    if (verts.size() == 1) {
      vertices_.insert(verts[0]);
      return;
    }
    auto [it, fresh] = by_dim_[verts.size() - 1].insert(verts);
    if (!fresh) return;
    std::vector<int> face;
    face.reserve(verts.size() - 1);
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
      face.clear();
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (i != skip) face.push_back(verts[i]);
      insert_closed(face);
    }
  }

  std::set<int> vertices_;
  std::map<std::size_t, std::set<std::vector<int>>> by_dim_;
};

// Sign assignment s(a,b) in {+1,-1} on unordered vertex pairs, defaulting to
// +1; only the -1 pairs are stored. Used as the transition data of a
// rank-one local system trivialized at the vertices: transporting a fiber
// coordinate across the edge (a,b) multiplies it by s(a,b). Consistency over
// a complex means s(a,b) s(b,c) s(a,c) = +1 on every 2-simplex [a,b,c] and
// every -1 pair is actually an edge.
class SignCocycle {
 public:
  static SignCocycle trivial() { return SignCocycle(); }

  void set(int a, int b, int sign) {
    if (a == b) throw input_error("sign on a degenerate pair");
    if (sign != 1 && sign != -1)
      throw input_error("edge sign must be +1 or -1");
    auto key = ordered(a, b);
    if (sign == -1)
      negatives_.insert(key);
    else
      negatives_.erase(key);
  }

  int sign(int a, int b) const {
    return negatives_.count(ordered(a, b)) ? -1 : 1;
  }

  bool is_trivial() const { return negatives_.empty(); }

  const std::set<std::pair<int, int>>& negative_pairs() const {
    return negatives_;
  }

  // First inconsistency of this assignment over the model, or nullopt when
  // it is a valid cocycle there.
  std::optional<std::string> first_violation(const CellModel& model) const {
    for (const auto& [a, b] : negatives_)
      if (!model.has_simplex({a, b}))
        return "sign -1 assigned to (" + std::to_string(a) + "," +
               std::to_string(b) + ") which is not an edge of the model";
    for (const auto& tri : model.simplices(2)) {
      int prod = sign(tri[0], tri[1]) * sign(tri[1], tri[2]) *
                 sign(tri[0], tri[2]);
      if (prod != 1)
        return "cocycle condition fails on 2-simplex " +
               detail::simplex_str(tri);
    }
    return std::nullopt;
  }

  bool valid_over(const CellModel& model) const {
    return !first_violation(model).has_value();
  }

  friend bool operator==(const SignCocycle& a, const SignCocycle& b) {
    return a.negatives_ == b.negatives_;
  }

 private:
  static std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  std::set<std::pair<int, int>> negatives_;
};

}  // namespace mbkit
