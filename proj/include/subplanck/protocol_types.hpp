#pragma once

#include "subplanck/states.hpp"

namespace subplanck {

// Two-level atomic state c_e |e> + c_g |g>.
struct AtomState {
  cplx c_e;
  cplx c_g;

  double norm() const;
  AtomState normalized() const;
  // Orthogonal partner in the same two-dimensional space.
  AtomState orthogonal() const;
};

// (1/sqrt(2)) (e^{i eta} |e> + e^{i theta} |g>)
AtomState ramsey_atom(double eta, double theta);

}  // namespace subplanck
