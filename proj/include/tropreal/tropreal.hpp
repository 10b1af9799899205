#pragma once

// Umbrella header.

#include "tropreal/rational.hpp"
#include "tropreal/hyperfield.hpp"
#include "tropreal/puiseux.hpp"
#include "tropreal/polynomial.hpp"
#include "tropreal/parser.hpp"
#include "tropreal/fourier_motzkin.hpp"
#include "tropreal/polyhedra.hpp"
#include "tropreal/semialg.hpp"
#include "tropreal/json_io.hpp"
#include "tropreal/svg.hpp"
#include "tropreal/scenarios.hpp"
#include "tropreal/checks.hpp"
