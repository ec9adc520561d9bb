// Copyright 2026 The qconcat Authors
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

#include "qconcat/additive_code.hpp"
#include "qconcat/bounds.hpp"
#include "qconcat/codespec.hpp"
#include "qconcat/concatenation.hpp"
#include "qconcat/counting.hpp"
#include "qconcat/decoder.hpp"
#include "qconcat/distance.hpp"
#include "qconcat/enumerate.hpp"
#include "qconcat/gf2.hpp"
#include "qconcat/gf2m.hpp"
#include "qconcat/io.hpp"
#include "qconcat/quantum_rs.hpp"
#include "qconcat/reed_solomon.hpp"
#include "qconcat/search.hpp"
#include "qconcat/symplectic.hpp"
#include "qconcat/symplectic_basis.hpp"
#include "qconcat/verify.hpp"
