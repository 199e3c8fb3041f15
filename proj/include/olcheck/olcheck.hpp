#pragma once

#include "olcheck/builtins.hpp"
#include "olcheck/checker.hpp"
#include "olcheck/classify.hpp"
#include "olcheck/conditions.hpp"
#include "olcheck/error.hpp"
#include "olcheck/isomorphism.hpp"
#include "olcheck/lattice.hpp"
#include "olcheck/logic.hpp"
#include "olcheck/syntax.hpp"
#include "olcheck/tables.hpp"
#include "olcheck/term.hpp"
