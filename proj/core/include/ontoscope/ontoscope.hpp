#pragma once

#include "ontoscope/detection.hpp"
#include "ontoscope/error.hpp"
#include "ontoscope/existential.hpp"
#include "ontoscope/graph.hpp"
#include "ontoscope/ingest.hpp"
#include "ontoscope/normalize.hpp"
#include "ontoscope/pipeline.hpp"
#include "ontoscope/reduction.hpp"
#include "ontoscope/report.hpp"
#include "ontoscope/rules.hpp"
#include "ontoscope/triples.hpp"
#include "ontoscope/version.hpp"
