#pragma once

#include "alpert/basis.hpp"
#include "alpert/dyadic.hpp"
#include "alpert/groebner.hpp"
#include "alpert/io.hpp"
#include "alpert/linalg.hpp"
#include "alpert/measure.hpp"
#include "alpert/piecewise.hpp"
#include "alpert/polynomial.hpp"
#include "alpert/rational.hpp"
#include "alpert/spaces.hpp"
#include "alpert/vanishing.hpp"
