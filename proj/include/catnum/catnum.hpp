#pragma once

#include "catnum/arith_advanced.hpp"
#include "catnum/arith_basic.hpp"
#include "catnum/arith_block.hpp"
#include "catnum/bintree.hpp"
#include "catnum/complexity.hpp"
#include "catnum/convert.hpp"
#include "catnum/core.hpp"
#include "catnum/error.hpp"
#include "catnum/giant.hpp"
#include "catnum/multitree.hpp"
#include "catnum/natref.hpp"
#include "catnum/parenword.hpp"
