#ifndef WITGEN_MODELS_HPP
#define WITGEN_MODELS_HPP

#include <vector>

#include "witgen/cohomology.hpp"

namespace witgen {

// One projective-bundle stage of a generalized Bott tower: a CP^{fiber_dim}
// bundle P(O + O(t_1) + ... + O(t_{fiber_dim})), each twist t_i a vector of
// coefficients over the generators of the previous stages.
struct BottStage {
  int fiber_dim = 1;
  std::vector<std::vector<long>> twists; // fiber_dim vectors, each of length (stage index - 1)
};

ManifoldModel point_model();
ManifoldModel projective_space(int n);
ManifoldModel product_of_projective_spaces(const std::vector<int>& dims);
ManifoldModel bott_tower(const std::vector<BottStage>& stages, const std::string& name);

} // namespace witgen

#endif
