#include "cauchy/hadamard.hpp"

#include <sstream>

#include "cauchy/errors.hpp"

namespace cauchy {

SymmetricTensor hadamard(const SymmetricTensor& a, const SymmetricTensor& b) {
    if (a.order() != b.order() || a.dimension() != b.dimension()) {
        std::ostringstream msg;
        msg << "entrywise product needs matching shapes, got order " << a.order()
            << " dim " << a.dimension() << " against order " << b.order()
            << " dim " << b.dimension();
        throw ShapeMismatch(msg.str());
    }
    SymmetricTensor out(a.order(), a.dimension());
    for (std::size_t pos = 0; pos < out.canonical_size(); ++pos) {
        out.set_value_at(pos, a.value_at(pos) * b.value_at(pos));
    }
    return out;
}

SymmetricTensor hadamard_chain(std::span<const SymmetricTensor> factors) {
    if (factors.empty()) {
        throw EmptyList("entrywise product needs at least one factor");
    }
    SymmetricTensor out = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
        out = hadamard(out, factors[k]);
    }
    return out;
}

}  // namespace cauchy
