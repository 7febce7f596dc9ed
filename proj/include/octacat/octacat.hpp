#pragma once

// Umbrella header for the octacat library.

#include "errors.hpp"
#include "polyq.hpp"
#include "diagrams.hpp"
#include "morphism.hpp"
#include "karoubi.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "presentations.hpp"
#include "matrix_rep.hpp"
#include "omega.hpp"
