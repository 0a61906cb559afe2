#pragma once

#include "edsm/affix.hpp"
#include "edsm/anchor.hpp"
#include "edsm/approx_search.hpp"
#include "edsm/compacted_trie.hpp"
#include "edsm/eds.hpp"
#include "edsm/engine.hpp"
#include "edsm/errata.hpp"
#include "edsm/exact.hpp"
#include "edsm/generator.hpp"
#include "edsm/geometry.hpp"
#include "edsm/heavy_light.hpp"
#include "edsm/lce.hpp"
#include "edsm/pattern.hpp"
#include "edsm/prefix_set.hpp"
#include "edsm/segment_index.hpp"
