// Copyright 2026 The hamlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Umbrella header.

#pragma once

#include "hamlab/atlas.hpp"
#include "hamlab/canonical.hpp"
#include "hamlab/closure.hpp"
#include "hamlab/contraction.hpp"
#include "hamlab/domination.hpp"
#include "hamlab/error.hpp"
#include "hamlab/families.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/hamilton.hpp"
#include "hamlab/hypergraph.hpp"
#include "hamlab/io.hpp"
#include "hamlab/linegraph.hpp"
#include "hamlab/named.hpp"
#include "hamlab/parallel.hpp"
#include "hamlab/pipeline.hpp"
#include "hamlab/reduction.hpp"
#include "hamlab/search.hpp"
#include "hamlab/structure.hpp"
#include "hamlab/subgraph.hpp"
#include "hamlab/suites.hpp"
#include "hamlab/trails.hpp"
