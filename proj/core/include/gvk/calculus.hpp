#pragma once

#include "gvk/alg.hpp"

namespace gvk {

/// Coordinate exterior derivative. d of a top form is the zero form of
/// grade n + 1.
DiffForm exterior_derivative(const DiffForm& w);

/// Schouten bracket [U, V] of grade k + l - 1.
///
/// Computed by derivations alone: bilinearity, the graded Leibniz rule
///   [U, V^W] = [U, V]^W + (-1)^{(k-1)l} V^[U, W],
/// graded antisymmetry [U, V] = -(-1)^{(k-1)(l-1)} [V, U], the base cases
/// [X, f] = X f and [f, g] = 0, and the vanishing of brackets between
/// constant coordinate multivectors.
MultiVector schouten(const MultiVector& u, const MultiVector& v);

/// Lie derivative of a form along a vector field via Cartan's formula.
DiffForm lie_derivative(const MultiVector& x, const DiffForm& w);

/// Lie derivative of a multivector along a vector field, [X, U].
MultiVector lie_derivative(const MultiVector& x, const MultiVector& u);

/// Directional derivative X(f) of a scalar along a vector field.
Expr directional(const MultiVector& x, const Expr& f);

}  // namespace gvk
