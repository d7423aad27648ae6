#pragma once

#include <span>

#include "cauchy/symmetric_tensor.hpp"

namespace cauchy {

// Entrywise product of two symmetric tensors of identical shape. The product
// of PSD tensors is PSD and of PD tensors is PD, but a product of Cauchy
// tensors is generally not Cauchy, so the result is a plain SymmetricTensor.
SymmetricTensor hadamard(const SymmetricTensor& a, const SymmetricTensor& b);

// Left fold of hadamard over a nonempty factor list.
SymmetricTensor hadamard_chain(std::span<const SymmetricTensor> factors);

}  // namespace cauchy
