// Umbrella header for the eprgame library.
#pragma once

#include "eprgame/bell.hpp"
#include "eprgame/direction.hpp"
#include "eprgame/equilibria.hpp"
#include "eprgame/ewl.hpp"
#include "eprgame/game.hpp"
#include "eprgame/payoffs.hpp"
#include "eprgame/spin.hpp"
#include "eprgame/two_qubit.hpp"
