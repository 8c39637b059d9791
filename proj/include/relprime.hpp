#pragma once

#include "relprime/affine.hpp"
#include "relprime/arith.hpp"
#include "relprime/bignum.hpp"
#include "relprime/coprime_subsets.hpp"
#include "relprime/errors.hpp"
#include "relprime/integer_set.hpp"
#include "relprime/oracle.hpp"
#include "relprime/subset_phi.hpp"
#include "relprime/verify.hpp"
