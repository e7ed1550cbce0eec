#pragma once

// Umbrella header for the heaps-of-pieces library.

#include "heaps/alphabet.hpp"
#include "heaps/coxeter.hpp"
#include "heaps/enumerate.hpp"
#include "heaps/errors.hpp"
#include "heaps/fc_rank.hpp"
#include "heaps/heap.hpp"
#include "heaps/io.hpp"
#include "heaps/rank.hpp"
