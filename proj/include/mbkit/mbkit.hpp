#pragma once

// Umbrella header: everything the library provides.

#include "mbkit/catalog.hpp"
#include "mbkit/cell_model.hpp"
#include "mbkit/cli.hpp"
#include "mbkit/counting.hpp"
#include "mbkit/descriptor.hpp"
#include "mbkit/errors.hpp"
#include "mbkit/flow.hpp"
#include "mbkit/homology.hpp"
#include "mbkit/intpoly.hpp"
#include "mbkit/json_io.hpp"
#include "mbkit/matrix.hpp"
#include "mbkit/morsify.hpp"
