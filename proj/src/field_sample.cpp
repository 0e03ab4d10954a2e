#include "vessels/field_sample.hpp"

#include <functional>

namespace vessels {

FieldSample::FieldSample(std::vector<Axis> ax, std::string eq)
    : axes(std::move(ax)), margin(axes.size(), 0), equation(std::move(eq)) {
  values.resize(total());
}

int FieldSample::total() const {
  int n = 1;
  for (const Axis& a : axes) n *= a.count;
  return n;
}

int FieldSample::stride(int axis) const {
  int s = 1;
  for (size_t a = axis + 1; a < axes.size(); ++a) s *= axes[a].count;
  return s;
}

int FieldSample::index(const std::vector<int>& idx) const {
  int flat = 0;
  for (size_t a = 0; a < axes.size(); ++a) flat = flat * axes[a].count + idx[a];
  return flat;
}

bool FieldSample::interior(int flat) const {
  for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
    const int k = flat % axes[a].count;
    flat /= axes[a].count;
    if (k < margin[a] || k >= axes[a].count - margin[a]) return false;
  }
  return true;
}

FieldSample finite_diff(const FieldSample& field, int axis, int order) {
  if (axis < 0 || axis >= static_cast<int>(field.axes.size()))
    throw std::invalid_argument("finite_diff: no such axis");
  if (order < 1 || order > 3)
    throw std::invalid_argument("finite_diff: order must be 1..3");
  const Axis& ax = field.axes[axis];
  if (ax.count < order + 2)
    throw std::invalid_argument("finite_diff: too few samples for the stencil");
  if (ax.step <= 0.0) throw std::invalid_argument("finite_diff: axis step must be positive");

  const int reach = (order == 3) ? 2 : 1;
  const double h = ax.step;
  const int s = field.stride(axis);
  const int n = ax.count;

  FieldSample out = field;
  out.margin[axis] = std::max(field.margin[axis] + reach, reach);

  for (int flat = 0; flat < field.total(); ++flat) {
    const int k = (flat / s) % n;
    if (k < reach || k >= n - reach) {
      out.values[flat] = CMatrix::Zero(field.values[flat].rows(), field.values[flat].cols());
      continue;
    }
    const CMatrix& fm1 = field.values[flat - s];
    const CMatrix& fp1 = field.values[flat + s];
    switch (order) {
      case 1:
        out.values[flat] = (fp1 - fm1) / (2.0 * h);
        break;
      case 2:
        out.values[flat] = (fp1 - 2.0 * field.values[flat] + fm1) / (h * h);
        break;
      case 3: {
        const CMatrix& fm2 = field.values[flat - 2 * s];
        const CMatrix& fp2 = field.values[flat + 2 * s];
        out.values[flat] = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
        break;
      }
    }
  }
  return out;
}

FieldSample field_map(const FieldSample& a,
                      const std::function<CMatrix(const CMatrix&)>& f) {
  FieldSample out = a;
  for (auto& v : out.values) v = f(v);
  return out;
}

FieldSample field_zip(const FieldSample& a, const FieldSample& b,
                      const std::function<CMatrix(const CMatrix&, const CMatrix&)>& f) {
  FieldSample out = a;
  for (int k = 0; k < a.total(); ++k) out.values[k] = f(a.values[k], b.values[k]);
  for (size_t ax = 0; ax < out.margin.size(); ++ax)
    out.margin[ax] = std::max(a.margin[ax], b.margin[ax]);
  return out;
}

double field_max_norm(const FieldSample& a) {
  double m = 0.0;
  for (int k = 0; k < a.total(); ++k)
    if (a.interior(k)) m = std::max(m, opnorm(a.values[k]));
  return m;
}

}  // namespace vessels
