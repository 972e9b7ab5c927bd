#ifndef STRONGPROD_STRONGPROD_HPP
#define STRONGPROD_STRONGPROD_HPP

// Everything, including the JSON report layer (needs nlohmann/json on the
// include path).

#include "bitset.hpp"
#include "budget.hpp"
#include "campaigns.hpp"
#include "canonical.hpp"
#include "catalog.hpp"
#include "checks.hpp"
#include "corpus.hpp"
#include "domination.hpp"
#include "errors.hpp"
#include "gallai_edmonds.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "matching.hpp"
#include "parallel.hpp"
#include "product.hpp"
#include "report.hpp"
#include "verdict.hpp"
#include "witnesses.hpp"

#endif // STRONGPROD_STRONGPROD_HPP
