#pragma once

#include "gamma2/gf2.hpp"
#include "gamma2/tensor.hpp"
#include "gamma2/word.hpp"
#include "gamma2/endo.hpp"
#include "gamma2/magnus.hpp"
#include "gamma2/homology.hpp"
#include "gamma2/catalog.hpp"
#include "gamma2/johnson.hpp"
#include "gamma2/ranks.hpp"
#include "gamma2/rng.hpp"
#include "gamma2/verify.hpp"
