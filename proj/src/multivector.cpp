#include "cliff/multivector.hpp"

namespace cliff {

Multivector<Complex> to_complex(const Multivector<Exact>& a) {
  Multivector<Complex> r(a.signature());
  for (const auto& [mask, c] : a.terms()) r.accumulate(mask, c.to_complex());
  return r;
}

}  // namespace cliff
