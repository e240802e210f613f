#pragma once

#include "errors.hpp"
#include "matrix_core.hpp"
#include "pochhammer.hpp"
#include "catalog.hpp"
#include "convergence.hpp"
#include "series.hpp"
#include "quadrature.hpp"
#include "integrals.hpp"
#include "bilateral.hpp"
#include "formula.hpp"
#include "identities.hpp"
#include "verification.hpp"
#include "io.hpp"
