#pragma once

#include "tricube/integer.hpp"
#include "tricube/intmath.hpp"
#include "tricube/json_io.hpp"
#include "tricube/oracle.hpp"
#include "tricube/scan.hpp"
#include "tricube/solver.hpp"
#include "tricube/trace.hpp"
