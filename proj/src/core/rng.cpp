#include "rlab/core/rng.hpp"

namespace rlab {

SequentialDraws derive_stream(RngStreamSpec spec, Purpose purpose) { return SequentialDraws(spec, purpose); }

}  // namespace rlab
