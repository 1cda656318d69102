#pragma once

// Exact-arithmetic toolkit for complete toric varieties: fans and their
// resolutions, summed lattice-point series, equivariant (co)homology data,
// the localized equivariant Todd class, and Brion-style point counting.

#include "toric/cech.hpp"
#include "toric/cone.hpp"
#include "toric/equivariant.hpp"
#include "toric/fan.hpp"
#include "toric/genfun.hpp"
#include "toric/halfopen.hpp"
#include "toric/laurent.hpp"
#include "toric/piecewise.hpp"
#include "toric/poly.hpp"
#include "toric/polytope.hpp"
#include "toric/resolve.hpp"
#include "toric/todd.hpp"
