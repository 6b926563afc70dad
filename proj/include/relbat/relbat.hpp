#ifndef RELBAT_RELBAT_HPP
#define RELBAT_RELBAT_HPP

#include "relbat/bits.hpp"
#include "relbat/bounds.hpp"
#include "relbat/engine.hpp"
#include "relbat/graph.hpp"
#include "relbat/labeling.hpp"
#include "relbat/mincut.hpp"
#include "relbat/parse.hpp"
#include "relbat/probability.hpp"
#include "relbat/report_json.hpp"

#endif  // RELBAT_RELBAT_HPP
