#pragma once

#include <vector>

#include "tpsgeo/diffgeo/forms.hpp"
#include "tpsgeo/diffgeo/vector_field.hpp"

namespace tpsgeo::diffgeo {

// Polynomial map F from a source chart to a target chart, given by the
// target coordinates as functions on the source. Source symbols listed as
// parameters are held fixed: they carry no differential.
class PolyMap {
 public:
  PolyMap(ChartPtr source, ChartPtr target, std::vector<LaurentPoly> images,
          std::vector<size_t> parameters = {});

  const ChartPtr& source() const { return source_; }
  const ChartPtr& target() const { return target_; }
  const std::vector<LaurentPoly>& images() const { return images_; }

  PolyMatrix jacobian() const;
  LaurentPoly pull(const LaurentPoly& f) const;
  DiffForm pull(const DiffForm& w) const;
  // Pullback of a covariant 2-tensor: J^T (g o F) J.
  PolyMatrix pull_metric(const PolyMatrix& g) const;
  // Pushforward of a source field, expressed on the target via F^{-1}.
  VectorField push(const VectorField& x, const PolyMap& inverse) const;

 private:
  DiffForm pulled_differential(size_t target_index) const;

  ChartPtr source_, target_;
  std::vector<LaurentPoly> images_;
  std::vector<bool> is_param_;
};

}  // namespace tpsgeo::diffgeo
