#pragma once

#include "drunkcop/game.hpp"
#include "drunkcop/generators.hpp"
#include "drunkcop/graph.hpp"
#include "drunkcop/graph_io.hpp"
#include "drunkcop/hitting.hpp"
#include "drunkcop/lemmas.hpp"
#include "drunkcop/monte_carlo.hpp"
#include "drunkcop/policies.hpp"
#include "drunkcop/solvers.hpp"
#include "drunkcop/suites.hpp"
#include "drunkcop/walks.hpp"
