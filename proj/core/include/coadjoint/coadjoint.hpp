#pragma once

#include "coadjoint/classifier.hpp"
#include "coadjoint/error.hpp"
#include "coadjoint/minkowski.hpp"
#include "coadjoint/poincare.hpp"
#include "coadjoint/sampling.hpp"
#include "coadjoint/tolerance.hpp"
