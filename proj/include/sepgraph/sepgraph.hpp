#pragma once

// Umbrella header: vertex cuts, Cheeger constants, separation profiles,
// cage families, and cover-driven balancing cuts.

#include "sepgraph/asdim.hpp"
#include "sepgraph/bits.hpp"
#include "sepgraph/cuts.hpp"
#include "sepgraph/errors.hpp"
#include "sepgraph/families.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/profile.hpp"
#include "sepgraph/rational.hpp"
#include "sepgraph/rng.hpp"
