#include "logamoeba/tolerances.hpp"

#include "logamoeba/error.hpp"

namespace logamoeba {

namespace {

template <typename Fn>
void for_each_field(Tolerances& t, Fn&& fn) {
  fn("cluster", t.cluster);
  fn("residual", t.residual);
  fn("backsub", t.backsub);
  fn("merge", t.merge);
  fn("real", t.real);
  fn("projective", t.projective);
  fn("zero_resultant", t.zero_resultant);
  fn("trim", t.trim);
  fn("collision", t.collision);
  fn("escape_radius", t.escape_radius);
}

}  // namespace

void Tolerances::set(std::string_view name, double value) {
  if (!(value > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "tolerance '" + std::string(name) + "' must be positive");
  }
  bool found = false;
  for_each_field(*this, [&](std::string_view n, double& field) {
    if (n == name) {
      field = value;
      found = true;
    }
  });
  if (!found) throw Error(ErrorCode::InvalidInput, "unknown tolerance '" + std::string(name) + "'");
}

std::map<std::string, double> Tolerances::named() const {
  std::map<std::string, double> out;
  Tolerances copy = *this;
  for_each_field(copy, [&](std::string_view n, double& field) { out.emplace(std::string(n), field); });
  return out;
}

}  // namespace logamoeba
