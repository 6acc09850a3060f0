#pragma once

#include <cstdint>

#include "mselab/gadgets.hpp"
#include "mselab/mse_instance.hpp"

namespace mselab {

// Standalone gadget with s = end_a and t = end_b.
MseInstance gadget_instance(const GadgetHandle& gadget, std::int64_t p, std::int64_t k);

// One directed connector between v (top) and w (bottom) with auxiliary
// terminals: two parallel arcs s -> v and two parallel arcs w -> t, so two
// routes can reach and leave the gadget without sharing. p = 2.
MseInstance connector_traversal_fixture(int chain_length, std::int64_t k);

// Two connectors g1 = (v1, w1) and g2 = (v2, w2) with arcs s -> v1, w1 -> t,
// s -> w2 and v2 -> t: one route crosses g1 downwards, the other crosses g2
// upwards. p = 2.
MseInstance opposite_crossing_fixture(int chain_length, std::int64_t k);

}  // namespace mselab
