// Copyright 2026 The mahler-t Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header for the library part (no JSON or CLI dependencies).

#include "mahler/error.hpp"
#include "mahler/arith/factorize.hpp"
#include "mahler/arith/natural.hpp"
#include "mahler/arith/primality.hpp"
#include "mahler/arith/rational.hpp"
#include "mahler/arith/valuation.hpp"
#include "mahler/measure/mahler.hpp"
#include "mahler/measure/types.hpp"
#include "mahler/quadfield/attainment.hpp"
#include "mahler/quadfield/field.hpp"
#include "mahler/quadfield/squarefree.hpp"
#include "mahler/ratopt/decomposition.hpp"
#include "mahler/ratopt/optimizer.hpp"
#include "mahler/ratopt/oracle.hpp"
#include "mahler/ratopt/tparam.hpp"
