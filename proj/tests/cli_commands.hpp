#pragma once

// One invocation per CLI command, used for the determinism checks.

#include <string>
#include <vector>

namespace clicases {

inline std::vector<std::vector<std::string>> every_command() {
  return {
      {"basis", "--m", "2", "--n", "3", "--r", "1", "--deg", "2"},
      {"straighten", "--m", "3", "--n", "3", "--r", "2", "--deg", "3", "--seed", "42"},
      {"straighten", "--m", "2", "--n", "2", "--r", "2", "--poly", "x[1,2]*x[2,1]", "--format", "table"},
      {"member", "--m", "3", "--n", "3", "--r", "1", "--deg", "2", "--seed", "7"},
      {"hilbert", "--m", "3", "--n", "3", "--r", "2", "--deg", "3"},
      {"mu", "--m", "3", "--n", "3", "--r", "2", "--t", "2"},
      {"mult", "--m", "3", "--n", "3", "--r", "2"},
      {"hodge", "--n", "4", "--r", "2", "--t", "1"},
      {"classify", "--m", "3", "--n", "3", "--r", "2", "--t", "2", "--ideal", "q"},
      {"certify", "--m", "3", "--n", "3", "--r", "2", "--t", "1", "--deg-bound", "5"},
      {"cone-check", "--m", "3", "--n", "2", "--r", "1", "--deg-bound", "5"},
      {"cone-check", "--m", "3", "--n", "3", "--r", "1", "--t", "3", "--eps", "1/3", "--deg-bound", "5"},
      {"tilde-check", "--m", "2", "--n", "3", "--r", "2", "--deg-bound", "4"},
      {"ladder-check", "--m", "2", "--n", "3", "--r", "2", "--delta", "[1|2]", "--deg-bound", "2"},
      {"mcm-classes", "--m", "4", "--n", "3", "--r", "2", "--format", "table"},
  };
}

}  // namespace clicases
