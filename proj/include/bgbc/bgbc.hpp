#pragma once

// Umbrella header for the exact symbolic engine of the rank-d
// beta-gamma-bc vertex superalgebra.

#include "bgbc/basis.hpp"
#include "bgbc/cartan.hpp"
#include "bgbc/checks.hpp"
#include "bgbc/fields.hpp"
#include "bgbc/invariants.hpp"
#include "bgbc/linalg.hpp"
#include "bgbc/linear_iso.hpp"
#include "bgbc/modes.hpp"
#include "bgbc/monomial.hpp"
#include "bgbc/parallel.hpp"
#include "bgbc/products.hpp"
#include "bgbc/rational.hpp"
#include "bgbc/report.hpp"
#include "bgbc/state.hpp"
#include "bgbc/vector_field.hpp"
