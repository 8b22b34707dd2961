#pragma once

#include "halfspin/constants.hpp"
#include "halfspin/density.hpp"
#include "halfspin/eigenfunction.hpp"
#include "halfspin/error.hpp"
#include "halfspin/fd_solver.hpp"
#include "halfspin/format.hpp"
#include "halfspin/half_integer.hpp"
#include "halfspin/laguerre.hpp"
#include "halfspin/operator_set.hpp"
#include "halfspin/quadrature.hpp"
#include "halfspin/quantum_numbers.hpp"
#include "halfspin/radial_grid.hpp"
#include "halfspin/radial_series.hpp"
#include "halfspin/spectrum.hpp"
