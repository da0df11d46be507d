// Copyright 2026 The maxprop Authors
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

#include "maxprop/absolute_norm.hpp"
#include "maxprop/catalog.hpp"
#include "maxprop/checker.hpp"
#include "maxprop/common.hpp"
#include "maxprop/finite_vector.hpp"
#include "maxprop/gallery.hpp"
#include "maxprop/lipfree.hpp"
#include "maxprop/modulus.hpp"
#include "maxprop/norms.hpp"
#include "maxprop/orlicz.hpp"
#include "maxprop/orlicz_function.hpp"
#include "maxprop/report.hpp"
#include "maxprop/simplex.hpp"
#include "maxprop/transport.hpp"
#include "maxprop/vector_io.hpp"
