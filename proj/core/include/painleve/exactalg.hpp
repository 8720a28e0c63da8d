#pragma once

#include "painleve/error.hpp"
#include "painleve/exactalg/equality.hpp"
#include "painleve/exactalg/gcd.hpp"
#include "painleve/exactalg/infix.hpp"
#include "painleve/exactalg/linsolve.hpp"
#include "painleve/exactalg/monomial.hpp"
#include "painleve/exactalg/multipoly.hpp"
#include "painleve/exactalg/ratexpr.hpp"
#include "painleve/exactalg/scalar.hpp"
#include "painleve/exactalg/series.hpp"
#include "painleve/exactalg/sexpr.hpp"
#include "painleve/exactalg/var.hpp"
