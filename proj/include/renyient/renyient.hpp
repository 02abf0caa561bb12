// Copyright 2026 The renyient Authors
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

// Umbrella header.

#pragma once

#include "renyient/error.hpp"
#include "renyient/monogamy.hpp"
#include "renyient/parallel.hpp"
#include "renyient/qmat.hpp"
#include "renyient/renyi.hpp"
#include "renyient/sepstates.hpp"
#include "renyient/spinchain.hpp"
#include "renyient/statezoo.hpp"
#include "renyient/sweep.hpp"
