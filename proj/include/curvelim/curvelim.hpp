#pragma once

// Umbrella header: elimination theory along plane curves carrying a
// determinantal representation.

#include "curvelim/classical.hpp"
#include "curvelim/curve.hpp"
#include "curvelim/detrep.hpp"
#include "curvelim/errors.hpp"
#include "curvelim/json_io.hpp"
#include "curvelim/linalg.hpp"
#include "curvelim/matrix.hpp"
#include "curvelim/multi_index.hpp"
#include "curvelim/parse.hpp"
#include "curvelim/poly.hpp"
#include "curvelim/ratmap.hpp"
#include "curvelim/scalar.hpp"
