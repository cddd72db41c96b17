#pragma once

#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/groebner/module_vector.hpp"

namespace netlog {

// Homogeneous map source -> target, stored by columns (images of the source
// generators). Entry (i,j) has degree target.twist[i] - source.twist[j].
template <class K>
struct GradedMap {
  RingPtr<K> ring;
  FreeModule source;
  FreeModule target;
  std::vector<Vec<K>> columns;

  GradedMap() = default;
  GradedMap(RingPtr<K> R, FreeModule src, FreeModule tgt, std::vector<Vec<K>> cols)
      : ring(std::move(R)), source(std::move(src)), target(std::move(tgt)), columns(std::move(cols)) {
    check_degrees();
  }

  static GradedMap from_rows(RingPtr<K> R, FreeModule src, FreeModule tgt,
                             const std::vector<std::vector<Poly<K>>>& rows) {
    if (static_cast<int>(rows.size()) != tgt.rank()) throw InputError("matrix row count != target rank");
    std::vector<Vec<K>> cols(src.rank());
    for (int j = 0; j < src.rank(); ++j) {
      std::vector<Poly<K>> comps;
      for (int i = 0; i < tgt.rank(); ++i) {
        if (static_cast<int>(rows[i].size()) != src.rank()) throw InputError("ragged matrix");
        comps.push_back(rows[i][j]);
      }
      cols[j] = Vec<K>::from_components(comps);
    }
    return GradedMap(std::move(R), std::move(src), std::move(tgt), std::move(cols));
  }

  int rows() const { return target.rank(); }
  int cols() const { return source.rank(); }

  Poly<K> entry(int i, int j) const { return columns.at(j).component(i); }
  std::vector<std::vector<Poly<K>>> matrix() const {
    std::vector<std::vector<Poly<K>>> m(rows(), std::vector<Poly<K>>(cols()));
    for (int j = 0; j < cols(); ++j) {
      auto c = columns[j].components(rows());
      for (int i = 0; i < rows(); ++i) m[i][j] = c[i];
    }
    return m;
  }

  void check_degrees() const {
    if (static_cast<int>(columns.size()) != source.rank())
      throw InputError("graded map: column count != source rank");
    for (int j = 0; j < cols(); ++j)
      for (auto& t : columns[j].terms()) {
        if (t.comp < 0 || t.comp >= target.rank()) throw InputError("graded map: component out of range");
        if (t.m.degree() != target.twist(t.comp) - source.twist(j))
          throw InputError("graded map: entry (" + std::to_string(t.comp) + "," + std::to_string(j) +
                           ") has degree " + std::to_string(t.m.degree()) + ", expected " +
                           std::to_string(target.twist(t.comp) - source.twist(j)));
      }
  }

  Vec<K> apply(const Vec<K>& v) const {
    Vec<K> acc;
    for (auto& t : v.terms()) acc = acc + columns.at(t.comp).mul_term(t.m, t.c);
    return acc;
  }

  GradedMap transpose() const {
    std::vector<std::vector<VTerm<K>>> cols(rows());
    for (int j = 0; j < cols_count(); ++j)
      for (auto& t : columns[j].terms()) cols[t.comp].push_back({j, t.m, t.c});
    std::vector<Vec<K>> out;
    for (auto& c : cols) out.push_back(Vec<K>::from_terms(std::move(c)));
    return GradedMap(ring, target.dual(), source.dual(), std::move(out));
  }

  // this ∘ other
  GradedMap compose(const GradedMap& other) const {
    if (!(other.target == source)) throw InputError("compose: module mismatch");
    std::vector<Vec<K>> out;
    for (auto& c : other.columns) out.push_back(apply(c));
    return GradedMap(ring, other.source, target, std::move(out));
  }

  bool is_zero() const {
    for (auto& c : columns)
      if (!c.is_zero()) return false;
    return true;
  }

 private:
  int cols_count() const { return static_cast<int>(columns.size()); }
};

}  // namespace netlog
