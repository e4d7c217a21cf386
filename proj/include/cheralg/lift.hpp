#pragma once
/// Finite field specialization, abstract structures, ModFinder, heads and
/// decomposition matrices, and the Gordon driver.

#include "cheralg/lift/abstract.hpp"
#include "cheralg/lift/gordon.hpp"
#include "cheralg/lift/heads.hpp"
#include "cheralg/lift/modfinder.hpp"
#include "cheralg/lift/specialize.hpp"
