#include "pezzo/poly.hpp"
#include "pezzo/field.hpp"

namespace pezzo::alg {

template class Ring<PrimeField>;
template class Ring<RationalField>;

}  // namespace pezzo::alg
