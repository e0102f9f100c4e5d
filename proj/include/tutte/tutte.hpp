#pragma once

// Convenience umbrella: pulls in the whole library.

#include "tutte/binomial.hpp"
#include "tutte/check_report.hpp"
#include "tutte/complete.hpp"
#include "tutte/graph.hpp"
#include "tutte/identities.hpp"
#include "tutte/mobius.hpp"
#include "tutte/multipoly.hpp"
#include "tutte/partitions.hpp"
#include "tutte/rational.hpp"
#include "tutte/series.hpp"
#include "tutte/tutte_core.hpp"
#include "tutte/variable.hpp"
