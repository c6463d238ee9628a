#pragma once

#include "betti.hpp"
#include "covers.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "format.hpp"
#include "ideal.hpp"
#include "monomial.hpp"
#include "packing.hpp"
#include "primes.hpp"
#include "sweep.hpp"
#include "symbolic.hpp"
#include "toric.hpp"
