#pragma once

#include "soficlab/census.hpp"
#include "soficlab/decide.hpp"
#include "soficlab/entropy.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/forge.hpp"
#include "soficlab/graph.hpp"
#include "soficlab/io.hpp"
#include "soficlab/period.hpp"
#include "soficlab/presentation.hpp"
#include "soficlab/shift.hpp"
#include "soficlab/structure.hpp"
#include "soficlab/tail.hpp"
#include "soficlab/verdict.hpp"
#include "soficlab/verify.hpp"
#include "soficlab/words.hpp"
