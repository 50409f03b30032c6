// Copyright 2026 The qenc Authors
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

// Everything in one include.

#pragma once

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/estimate.hpp"
#include "qenc/random.hpp"

#include "qenc/quantum/density_matrix.hpp"
#include "qenc/quantum/distance.hpp"
#include "qenc/quantum/measure.hpp"
#include "qenc/quantum/pauli.hpp"
#include "qenc/quantum/states.hpp"

#include "qenc/classical/prf.hpp"
#include "qenc/classical/prg.hpp"
#include "qenc/classical/towp.hpp"

#include "qenc/schemes/prf_ske.hpp"
#include "qenc/schemes/reference.hpp"
#include "qenc/schemes/registry.hpp"
#include "qenc/schemes/scheme.hpp"
#include "qenc/schemes/towp_pke.hpp"

#include "qenc/games/ind.hpp"
#include "qenc/games/oracles.hpp"
#include "qenc/games/reductions.hpp"
#include "qenc/games/role_library.hpp"
#include "qenc/games/roles.hpp"
#include "qenc/games/sem.hpp"

#include "qenc/io/serialize.hpp"
