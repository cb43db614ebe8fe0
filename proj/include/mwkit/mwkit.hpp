#pragma once

// Umbrella header for the medianwidth toolkit.

#include "mwkit/build.hpp"
#include "mwkit/decomp.hpp"
#include "mwkit/dot.hpp"
#include "mwkit/generate.hpp"
#include "mwkit/graph.hpp"
#include "mwkit/median.hpp"
#include "mwkit/oracle.hpp"
#include "mwkit/util.hpp"
