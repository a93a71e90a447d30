#pragma once

// Generalized stable/unstable partitions for perturbed hyperbolic torus
// maps, computed by forward/backward shadowing of the linear model.

#include "anofol/certified.hpp"
#include "anofol/config.hpp"
#include "anofol/foliation.hpp"
#include "anofol/hyperbolic.hpp"
#include "anofol/involution.hpp"
#include "anofol/lift.hpp"
#include "anofol/perturbation.hpp"
#include "anofol/report.hpp"
#include "anofol/sampling.hpp"
#include "anofol/shadowing.hpp"
#include "anofol/vec.hpp"
#include "anofol/verify.hpp"
