#pragma once

#include "grothmn/polyring.hpp"
#include "grothmn/shapes.hpp"

namespace grothmn {

/// The Grassmannian Grothendieck polynomial in n variables:
/// det(x_i^{lambda_j + n - j} (1 + b x_i)^{j-1}) divided exactly by the
/// Vandermonde product prod_{i<j}(x_i - x_j). Requires length(lambda) <= n.
Poly grothendieck(const Partition& lambda, int n);

/// The beta-free normalization b^{|lambda|} G_lambda(x/b), computed as a
/// formal term map (beta_rescale with d = |lambda|).
Poly grothendieck_tilde(const Partition& lambda, int n);

Poly elementary(int k, int n);
Poly complete(int k, int n);
Poly powersum(int k, int n);

/// Checks p_k = sum_{i=0}^{k-1} (-1)^i (k-i) e_i h_{k-i} exactly.
bool verify_powersum_identity(int k, int n);

} // namespace grothmn
