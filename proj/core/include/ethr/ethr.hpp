#pragma once

#include "ethr/automorphism.hpp"
#include "ethr/chain.hpp"
#include "ethr/code.hpp"
#include "ethr/correctability.hpp"
#include "ethr/erasure.hpp"
#include "ethr/gf2.hpp"
#include "ethr/montecarlo.hpp"
#include "ethr/oracle.hpp"
#include "ethr/pauli.hpp"
#include "ethr/polynomial.hpp"
#include "ethr/procedure.hpp"
#include "ethr/threshold.hpp"
