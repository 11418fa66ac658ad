// Copyright 2026 The WDP Dispatch Authors
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

// Everything except the CLI.

#pragma once

#include "wdp/benchmarks.hpp"
#include "wdp/economics/accounting.hpp"
#include "wdp/economics/perturbation.hpp"
#include "wdp/economics/sensitivity.hpp"
#include "wdp/engine.hpp"
#include "wdp/io/config_json.hpp"
#include "wdp/model.hpp"
#include "wdp/oracle/compare.hpp"
#include "wdp/oracle/grid.hpp"
#include "wdp/oracle/random_config.hpp"
#include "wdp/oracle/regions.hpp"
#include "wdp/sim/profile.hpp"
#include "wdp/sim/report_io.hpp"
#include "wdp/sim/simulate.hpp"
