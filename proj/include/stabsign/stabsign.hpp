#ifndef STABSIGN_STABSIGN_HPP
#define STABSIGN_STABSIGN_HPP

#include "stabsign/alpha.hpp"
#include "stabsign/dac_model.hpp"
#include "stabsign/exact_rational.hpp"
#include "stabsign/paintbox.hpp"
#include "stabsign/quadrature.hpp"
#include "stabsign/report.hpp"
#include "stabsign/rng.hpp"
#include "stabsign/sign_mc.hpp"
#include "stabsign/stable_sampler.hpp"

#endif  // STABSIGN_STABSIGN_HPP
