#pragma once

#include "rkgrasp/problems/stcp.hpp"

namespace rkgrasp {

/// The classic Steiner triple systems A_9, A_15, A_27, A_45, A_81, A_135,
/// A_243, ... used as covering benchmarks.
///
/// A_9 is the affine plane of order 3 and A_15 the Bose system over the
/// idempotent commutative quasigroup x*y = 3(x+y) mod 5. A_3m is built from
/// A_m on the points X x {0,1,2}: every triple copied into each layer, the
/// vertical triples {(x,0),(x,1),(x,2)}, and for each triple {x,y,z} the six
/// transversals {(x,i),(y,j),(z,k)} with {i,j,k} = {0,1,2}.
///
/// Throws std::invalid_argument unless order is 9*3^k or 15*3^k.
StcpInstance steiner_triple_system(int order);

}  // namespace rkgrasp
