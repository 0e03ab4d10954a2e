#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vessels/complex_matrix.hpp"

namespace vessels {

struct Axis {
  std::string name;
  double start = 0.0;
  double step = 0.0;
  int count = 0;
  double coord(int k) const { return start + k * step; }
};

// Operator- or scalar-valued function tabulated on a uniform (x,t[,y]) grid.
// margin[a] counts boundary layers along axis a already consumed by stencils;
// residual statistics skip them.
struct FieldSample {
  std::vector<Axis> axes;
  std::vector<CMatrix> values;  // row-major over axes
  std::vector<int> margin;
  std::string equation;

  FieldSample() = default;
  explicit FieldSample(std::vector<Axis> ax, std::string eq = "");

  int total() const;
  int stride(int axis) const;
  int index(const std::vector<int>& idx) const;
  bool interior(int flat) const;

  const CMatrix& at(const std::vector<int>& idx) const { return values[index(idx)]; }
  CMatrix& at(const std::vector<int>& idx) { return values[index(idx)]; }
};

// Central-difference derivative along one axis; order in 1..3, accuracy O(h^2).
// Fails unless the axis has at least order+2 samples.
FieldSample finite_diff(const FieldSample& field, int axis, int order);

// Pointwise algebra preserving grid metadata.
FieldSample field_map(const FieldSample& a,
                      const std::function<CMatrix(const CMatrix&)>& f);
FieldSample field_zip(const FieldSample& a, const FieldSample& b,
                      const std::function<CMatrix(const CMatrix&, const CMatrix&)>& f);

// Max operator norm over interior points.
double field_max_norm(const FieldSample& a);

}  // namespace vessels
