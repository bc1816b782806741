#pragma once

#include "flagorbits/permutation.hpp"
#include "flagorbits/weyl.hpp"
#include "flagorbits/exact_rank.hpp"
#include "flagorbits/pairs.hpp"
#include "flagorbits/flags.hpp"
#include "flagorbits/monoid.hpp"
#include "flagorbits/atlas.hpp"
#include "flagorbits/verify.hpp"
