#pragma once

// Umbrella header.

#include "axetlab/errors.hpp"
#include "axetlab/rational.hpp"
#include "axetlab/prime_field.hpp"
#include "axetlab/multipoly.hpp"
#include "axetlab/rational_function.hpp"
#include "axetlab/field.hpp"
#include "axetlab/expr.hpp"
#include "axetlab/linalg.hpp"
#include "axetlab/algebra.hpp"
#include "axetlab/fusion.hpp"
#include "axetlab/axes.hpp"
#include "axetlab/axets.hpp"
#include "axetlab/elements.hpp"
#include "axetlab/catalog.hpp"
#include "axetlab/report.hpp"
#include "axetlab/skewverify.hpp"
#include "axetlab/io.hpp"
#include "axetlab/acceptance_suite.hpp"
