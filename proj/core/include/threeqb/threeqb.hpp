#pragma once

#include "threeqb/canonical.hpp"
#include "threeqb/classify.hpp"
#include "threeqb/locc.hpp"
#include "threeqb/measures.hpp"
#include "threeqb/rng.hpp"
#include "threeqb/smalllinalg.hpp"
#include "threeqb/state.hpp"
#include "threeqb/statefile.hpp"
#include "threeqb/tensors.hpp"
#include "threeqb/verify.hpp"
