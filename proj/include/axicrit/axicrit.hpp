#pragma once

// Umbrella header.

#include "axicrit/config.hpp"
#include "axicrit/csv.hpp"
#include "axicrit/diagnostics.hpp"
#include "axicrit/diffops.hpp"
#include "axicrit/elliptic.hpp"
#include "axicrit/errors.hpp"
#include "axicrit/field.hpp"
#include "axicrit/grid.hpp"
#include "axicrit/ineqlab.hpp"
#include "axicrit/initial_conditions.hpp"
#include "axicrit/manufactured.hpp"
#include "axicrit/run.hpp"
#include "axicrit/snapshot.hpp"
#include "axicrit/solver.hpp"
#include "axicrit/state.hpp"
