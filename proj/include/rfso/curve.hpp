#pragma once

// Tabulated results: a shared abscissa plus any number of named columns,
// with deterministic CSV serialization (12 significant digits, '\n' line
// endings, no byte-order mark).

#include <string>
#include <vector>

namespace rfso {

struct Column {
  std::string name;
  std::vector<double> values;
};

struct Curve {
  std::string x_label;
  std::vector<double> x;
  std::vector<Column> columns;

  // Throws std::invalid_argument when a column length differs from x.
  void validate() const;
};

std::string to_csv(const Curve& curve);

}  // namespace rfso
