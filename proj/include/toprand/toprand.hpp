#pragma once

#include "bigint.hpp"
#include "bijection.hpp"
#include "coefficients.hpp"
#include "error.hpp"
#include "gperm.hpp"
#include "permutation.hpp"
#include "probability.hpp"
#include "segmented_partition.hpp"
#include "serialize.hpp"
#include "shuffle_algebra.hpp"
#include "shuffle_spec.hpp"
