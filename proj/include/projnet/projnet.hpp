// Copyright 2026 The projnet Authors
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

#pragma once

#include "projnet/bounds.hpp"
#include "projnet/closed_forms.hpp"
#include "projnet/cost_model.hpp"
#include "projnet/design.hpp"
#include "projnet/error.hpp"
#include "projnet/finite_field.hpp"
#include "projnet/generators.hpp"
#include "projnet/io.hpp"
#include "projnet/layout.hpp"
#include "projnet/metrics.hpp"
#include "projnet/projective_plane.hpp"
#include "projnet/rational.hpp"
#include "projnet/reference_tables.hpp"
#include "projnet/structural_params.hpp"
#include "projnet/sweep.hpp"
#include "projnet/tables.hpp"
#include "projnet/topology.hpp"
