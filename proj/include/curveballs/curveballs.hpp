#pragma once

// Umbrella header for the curveballs library: polygonal-curve similarity
// predicates and decision procedures, metric-ball range queries with
// VC-driven sampling, and empirical shattering experiments.

#include "curveballs/distances.hpp"
#include "curveballs/free_space.hpp"
#include "curveballs/geometry.hpp"
#include "curveballs/io.hpp"
#include "curveballs/predicates.hpp"
#include "curveballs/range_engine.hpp"
#include "curveballs/rng.hpp"
#include "curveballs/shapes.hpp"
#include "curveballs/sqrt_expr.hpp"
#include "curveballs/vc_lab.hpp"
#include "curveballs/version.hpp"
