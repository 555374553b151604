#pragma once

#include "citerank/citation_graph.hpp"
#include "citerank/error.hpp"
#include "citerank/export.hpp"
#include "citerank/ids.hpp"
#include "citerank/ingest.hpp"
#include "citerank/journal_graph.hpp"
#include "citerank/random.hpp"
#include "citerank/ranking.hpp"
#include "citerank/scc.hpp"
#include "citerank/scores.hpp"
#include "citerank/stochastic_matrix.hpp"
#include "citerank/synth.hpp"
