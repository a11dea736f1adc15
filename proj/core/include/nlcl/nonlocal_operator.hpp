#pragma once

#include "nlcl/fields.hpp"
#include "nlcl/kernel.hpp"

namespace nlcl {

/// Look-back average W of |q| at every face of q's grid, for the exponential
/// kernel exp(y/eta)/eta on y <= 0.
///
/// Exact for the piecewise-constant q extended by zero left of the domain:
/// the left-to-right recurrence
///   W_{i+1/2} = W_{i-1/2} + (1 - exp(-dx/eta)) * (|q_i| - W_{i-1/2})
/// with W = 0 at the leftmost face reproduces the integral at every face.
/// Cost O(n_cells).
FaceField eval_w_exponential(const CellField& q, double eta);

/// Same average for a tabulated BV kernel: exact integration of the
/// piecewise-constant |q| against the piecewise-linear kernel over
/// [face - support_length, face]. Cost O(n_cells * support_length / dx).
/// Throws KernelUnderResolved if support_length < dx.
FaceField eval_w_tabulated(const CellField& q, const KernelSpec& kernel);

/// Dispatches on the kernel variant.
FaceField eval_w(const CellField& q, const KernelSpec& kernel);

/// Residual of the exponential-kernel balance dW/dx = (|q| - W)/eta in its
/// discrete form: max over cells of
///   |(W_{i+1/2} - W_{i-1/2})/dx - (|q_i| - W_{i+1/2})/eta|,
/// matching each cell value with its right face. O(dx/eta^2) for smooth q.
double check_identity(const CellField& q, const FaceField& w, double eta);

}  // namespace nlcl
