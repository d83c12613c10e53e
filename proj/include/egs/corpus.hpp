#pragma once

// Bundled worked examples: instance and spline-set files for the tree T4 over
// ZZ[x,y], the cycle C3 over QQ[x,y] and over ZZ, the two-vertex path, a
// pairwise-coprime four-vertex graph, and the checks that `egs examples` runs.

#include <string>
#include <string_view>
#include <vector>

#include "egs/graph.hpp"
#include "egs/splines.hpp"

namespace egs::corpus {

struct File {
  std::string_view name;  // file name without directory, e.g. "t4.json"
  std::string_view json;
};

const std::vector<File>& files();
std::string_view text(std::string_view name);

LabeledGraph instance(std::string_view name);
SplineMatrix spline_set(std::string_view name, const LabeledGraph& g);
Components target(std::string_view name, const LabeledGraph& g);

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Check> run_checks();

}  // namespace egs::corpus
