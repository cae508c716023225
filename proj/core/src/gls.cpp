#include "dhm/gls.hpp"

#include <map>
#include <string>

namespace dhm {

DHMeasure DHMeasure::subset(std::span<const std::size_t> indices) const {
  DHMeasure out{{}, torus_dim};
  for (std::size_t i : indices) out.summands.push_back(summands.at(i));
  return out;
}

DHMeasure DHMeasure::with_flipped_sign(std::size_t k) const {
  DHMeasure out = *this;
  out.summands.at(k) = summands.at(k).negated();
  return out;
}

DHMeasure assemble(std::span<const FixedPointDatum> data, const PolarizingVector& eta) {
  DHMeasure m{{}, eta.dim()};
  m.summands.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::string where = "fixed point #" + std::to_string(i) + ": ";
    try {
      m.summands.push_back(make_cone_measure(data[i], eta));
    } catch (const NonGenericPolarization& e) {
      throw NonGenericPolarization(e.weight(), where + e.what());
    } catch (const Error& e) {
      throw Error(where + e.what());
    }
  }
  return m;
}

DensityValue eval_density(const DHMeasure& m, const RationalVector& b) {
  if (b.size() != m.torus_dim) throw Error("query point has wrong dimension");
  Rational total = 0;
  for (const ConeMeasure& c : m.summands) {
    const DensityValue v = c.density(b);
    if (!v.regular) return DensityValue::wall();
    total += v.value;
  }
  return {total, true};
}

std::vector<ComponentGroup> group_by_eta(const DHMeasure& m, std::span<const FixedPointDatum> data,
                                         const PolarizingVector& eta_nongeneric) {
  if (data.size() != m.summands.size()) throw Error("one fixed point per summand required");
  std::map<Rational, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < data.size(); ++i) {
    by_label[dot(eta_nongeneric.entries(), data[i].moment_value)].push_back(i);
  }
  std::vector<ComponentGroup> groups;
  for (auto& [label, members] : by_label) groups.push_back({label, std::move(members)});
  return groups;
}

std::vector<SupportEntry> support_report(const DHMeasure& m, const RationalVector& b) {
  std::vector<SupportEntry> out;
  for (std::size_t i = 0; i < m.summands.size(); ++i) {
    const ConeMeasure& c = m.summands[i];
    out.push_back({i, c.in_support(b), dot(c.eta(), c.base()) < dot(c.eta(), b), c.is_wall(b)});
  }
  return out;
}

}  // namespace dhm
