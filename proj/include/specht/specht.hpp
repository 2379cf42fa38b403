#pragma once

// Umbrella header: pulls in the whole library.

#include "specht/bigint.hpp"
#include "specht/characters.hpp"
#include "specht/errors.hpp"
#include "specht/garnir.hpp"
#include "specht/orders.hpp"
#include "specht/parallel.hpp"
#include "specht/partition.hpp"
#include "specht/permutation.hpp"
#include "specht/rep_matrix.hpp"
#include "specht/skew_shape.hpp"
#include "specht/straighten.hpp"
#include "specht/table_io.hpp"
#include "specht/tableau.hpp"
#include "specht/tabloid.hpp"
#include "specht/verify.hpp"
