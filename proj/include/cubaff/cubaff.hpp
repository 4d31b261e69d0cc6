#pragma once

// Umbrella header.

#include "cubaff/certificate.hpp"
#include "cubaff/classify.hpp"
#include "cubaff/cubic.hpp"
#include "cubaff/interval.hpp"
#include "cubaff/invariants.hpp"
#include "cubaff/jet.hpp"
#include "cubaff/parser.hpp"
#include "cubaff/random.hpp"
#include "cubaff/rat.hpp"
#include "cubaff/reduction.hpp"
#include "cubaff/report.hpp"
#include "cubaff/roots.hpp"
#include "cubaff/unipoly.hpp"
