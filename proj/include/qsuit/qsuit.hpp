#pragma once

// Umbrella header for the whole toolkit.

#include "qsuit/catalog.hpp"
#include "qsuit/core.hpp"
#include "qsuit/lu.hpp"
#include "qsuit/measures.hpp"
#include "qsuit/protocol.hpp"
#include "qsuit/random.hpp"
#include "qsuit/schmidt.hpp"
#include "qsuit/serialize.hpp"
#include "qsuit/state.hpp"
#include "qsuit/suitability.hpp"
