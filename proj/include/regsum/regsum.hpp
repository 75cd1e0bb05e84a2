#ifndef REGSUM_REGSUM_HPP
#define REGSUM_REGSUM_HPP

// Everything except the command-line layer.

#include "regsum/bernoulli.hpp"
#include "regsum/config.hpp"
#include "regsum/identities.hpp"
#include "regsum/oracles.hpp"
#include "regsum/stieltjes.hpp"
#include "regsum/summation.hpp"
#include "regsum/trig_series.hpp"
#include "regsum/zeta.hpp"

#endif  // REGSUM_REGSUM_HPP
