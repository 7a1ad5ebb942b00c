#pragma once

// Umbrella header for the library (everything except the command line front end).

#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/gadgets.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/io.hpp"
#include "burnkit/lift.hpp"
#include "burnkit/reduction.hpp"
#include "burnkit/solvers.hpp"
