#pragma once

#include "hitchin/action.hpp"
#include "hitchin/algebra.hpp"
#include "hitchin/errors.hpp"
#include "hitchin/field_config.hpp"
#include "hitchin/finite_diff.hpp"
#include "hitchin/holonomy.hpp"
#include "hitchin/ode.hpp"
#include "hitchin/phase.hpp"
#include "hitchin/profiles.hpp"
#include "hitchin/quadrature.hpp"
#include "hitchin/residual.hpp"
#include "hitchin/version.hpp"
