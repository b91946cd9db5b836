#pragma once

// Convenience umbrella: pulls in the whole library.

#include "eudata/config.hpp"
#include "eudata/errors.hpp"
#include "eudata/euler.hpp"
#include "eudata/ideal.hpp"
#include "eudata/matrix.hpp"
#include "eudata/monomial.hpp"
#include "eudata/oracle.hpp"
#include "eudata/parser.hpp"
#include "eudata/polar.hpp"
#include "eudata/polynomial.hpp"
#include "eudata/rational.hpp"
#include "eudata/report.hpp"
#include "eudata/seeding.hpp"
#include "eudata/strata.hpp"
#include "eudata/univariate.hpp"
#include "eudata/variety.hpp"
