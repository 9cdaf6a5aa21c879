#pragma once

// Umbrella header for the colored-pattern-matrix analysis library.

#include "cpmat/assignment.hpp"
#include "cpmat/bipartite.hpp"
#include "cpmat/color.hpp"
#include "cpmat/color_rule.hpp"
#include "cpmat/errors.hpp"
#include "cpmat/json_io.hpp"
#include "cpmat/pattern_matrix.hpp"
#include "cpmat/polynomial.hpp"
#include "cpmat/rational.hpp"
#include "cpmat/rational_matrix.hpp"
#include "cpmat/sampling.hpp"
#include "cpmat/system.hpp"
#include "cpmat/verification.hpp"
#include "cpmat/version.hpp"
