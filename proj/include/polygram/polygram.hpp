#pragma once

// Umbrella header: exact enumeration of parallelogram polyominoes,
// polycubes, and their d-dimensional relatives, with symbolic multiple zeta
// expansions of the associated Dirichlet generating functions, a geometric
// enumeration oracle, and OEIS b-file cross-checks.

#include "bignum.hpp"
#include "combinatorics.hpp"
#include "dirichlet.hpp"
#include "hyperd.hpp"
#include "oeis.hpp"
#include "oracle.hpp"
#include "polycube.hpp"
#include "polyomino.hpp"
#include "reference_data.hpp"
#include "series.hpp"
#include "table.hpp"
#include "table_io.hpp"
#include "verify.hpp"
