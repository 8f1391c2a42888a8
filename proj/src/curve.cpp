#include "rfso/curve.hpp"

#include <cstdio>
#include <stdexcept>

namespace rfso {

void Curve::validate() const {
  for (const Column& column : columns) {
    if (column.values.size() != x.size()) {
      throw std::invalid_argument("Curve: column '" + column.name +
                                  "' length does not match the abscissa");
    }
  }
}

std::string to_csv(const Curve& curve) {
  curve.validate();
  std::string out;
  out += curve.x_label;
  for (const Column& column : curve.columns) {
    out += ',';
    out += column.name;
  }
  out += '\n';
  char buffer[40];
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%.11e", curve.x[i]);
    out += buffer;
    for (const Column& column : curve.columns) {
      std::snprintf(buffer, sizeof buffer, "%.11e", column.values[i]);
      out += ',';
      out += buffer;
    }
    out += '\n';
  }
  return out;
}

}  // namespace rfso
