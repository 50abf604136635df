#pragma once

#include "algdc.hpp"
#include "budget.hpp"
#include "canonical.hpp"
#include "cover.hpp"
#include "disc.hpp"
#include "enumerate.hpp"
#include "freq.hpp"
#include "io.hpp"
#include "lemmas.hpp"
#include "path.hpp"
#include "pipeline.hpp"
#include "projection.hpp"
#include "rational.hpp"
#include "realize.hpp"
#include "rewire.hpp"
#include "sgraph.hpp"
#include "transform.hpp"
