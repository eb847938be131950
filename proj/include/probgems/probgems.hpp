#pragma once

#include "probgems/beatty.hpp"
#include "probgems/binom_tail.hpp"
#include "probgems/concentration.hpp"
#include "probgems/errors.hpp"
#include "probgems/exact.hpp"
#include "probgems/lexis.hpp"
#include "probgems/lln_bounds.hpp"
#include "probgems/numerics.hpp"
#include "probgems/partitions.hpp"
#include "probgems/ruin.hpp"
#include "probgems/runs.hpp"
#include "probgems/shuffle.hpp"
