#pragma once

#include "szego/config.hpp"
#include "szego/curve.hpp"
#include "szego/kernel.hpp"
#include "szego/laplace.hpp"
#include "szego/legendre.hpp"
#include "szego/polynomial.hpp"
#include "szego/quadrature.hpp"
#include "szego/report.hpp"
#include "szego/svg.hpp"
#include "szego/verify.hpp"
