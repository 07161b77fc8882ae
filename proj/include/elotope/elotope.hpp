// Copyright 2026 The Elotope Authors
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

#ifndef ELOTOPE_ELOTOPE_HPP
#define ELOTOPE_ELOTOPE_HPP

#include "elotope/chain.hpp"
#include "elotope/errors.hpp"
#include "elotope/game.hpp"
#include "elotope/graph.hpp"
#include "elotope/hodge.hpp"
#include "elotope/intransitivity.hpp"
#include "elotope/random.hpp"
#include "elotope/rps_lab.hpp"
#include "elotope/solver.hpp"

#endif  // ELOTOPE_ELOTOPE_HPP
