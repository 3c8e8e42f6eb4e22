#pragma once
#include <map>
#include <string>
#include <vector>

#include "curvefold/curve.hpp"

namespace curvefold {

// Named analytic curves used as fixtures and CLI inputs.
struct ExampleInfo {
  std::string name;
  bool is_plane = false;
  bool closed = false;
  std::string description;
  std::vector<std::pair<std::string, double>> params;  // name -> default
};

const std::vector<ExampleInfo>& example_registry();
bool is_plane_example(const std::string& name);

// `params` may override the registered defaults; unknown keys are rejected.
SpaceCurve make_space_example(const std::string& name,
                              const std::map<std::string, double>& params = {}, int n = 0);
PlaneCurve make_plane_example(const std::string& name,
                              const std::map<std::string, double>& params = {}, int n = 0);

// Parses "name" or "name(v1, v2, ...)" where values bind to the registered
// parameters in order.
void parse_example_spec(const std::string& spec, std::string& name,
                        std::map<std::string, double>& params);

}  // namespace curvefold
