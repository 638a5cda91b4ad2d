#pragma once

#include "fanflip/complex.hpp"
#include "fanflip/error.hpp"
#include "fanflip/fan.hpp"
#include "fanflip/generators.hpp"
#include "fanflip/io.hpp"
#include "fanflip/isomorphism.hpp"
#include "fanflip/moves.hpp"
#include "fanflip/recognition.hpp"
#include "fanflip/rng.hpp"
#include "fanflip/simplex.hpp"
#include "fanflip/z2.hpp"
