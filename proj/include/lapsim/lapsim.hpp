// Umbrella header for the whole library.
#pragma once

#include "lapsim/analysis.hpp"
#include "lapsim/ehrhart.hpp"
#include "lapsim/graph.hpp"
#include "lapsim/linalg.hpp"
#include "lapsim/matrix.hpp"
#include "lapsim/numeric.hpp"
#include "lapsim/regression.hpp"
#include "lapsim/report.hpp"
#include "lapsim/simplex.hpp"
