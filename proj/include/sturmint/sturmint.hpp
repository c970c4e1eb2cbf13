#pragma once

#include "sturmint/inertia.hpp"
#include "sturmint/parse.hpp"
#include "sturmint/polynomial.hpp"
#include "sturmint/rational.hpp"
#include "sturmint/root_engine.hpp"
#include "sturmint/sturm_chain.hpp"
#include "sturmint/sturm_matrix.hpp"
