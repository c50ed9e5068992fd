#pragma once

#include "matchbound/bounds.hpp"
#include "matchbound/certificate_io.hpp"
#include "matchbound/edge_list_io.hpp"
#include "matchbound/error.hpp"
#include "matchbound/exact_oracle.hpp"
#include "matchbound/generators.hpp"
#include "matchbound/graph.hpp"
#include "matchbound/local_search.hpp"
#include "matchbound/matching.hpp"
