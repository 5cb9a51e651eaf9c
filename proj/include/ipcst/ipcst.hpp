#pragma once

#include "ipcst/error.hpp"
#include "ipcst/rational.hpp"
#include "ipcst/graph.hpp"
#include "ipcst/contraction.hpp"
#include "ipcst/metrics.hpp"
#include "ipcst/io.hpp"
#include "ipcst/enumeration.hpp"
#include "ipcst/tree_greedy.hpp"
#include "ipcst/graph_greedy.hpp"
#include "ipcst/capacity_scaling.hpp"
#include "ipcst/oracle_eval.hpp"
#include "ipcst/instances.hpp"
