#pragma once
// negabeta.hpp - Umbrella header.

#include "negabeta/admissibility.hpp"
#include "negabeta/beta_value.hpp"
#include "negabeta/common.hpp"
#include "negabeta/digit_seq.hpp"
#include "negabeta/dynamics.hpp"
#include "negabeta/interval.hpp"
#include "negabeta/lapcount.hpp"
#include "negabeta/morphism.hpp"
#include "negabeta/polynomial.hpp"
#include "negabeta/solver.hpp"
#include "negabeta/validate.hpp"
