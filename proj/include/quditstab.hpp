// Copyright 2026 The quditstab Authors
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

#include "quditstab/checkmatrix.hpp"
#include "quditstab/clifford.hpp"
#include "quditstab/dense.hpp"
#include "quditstab/errors.hpp"
#include "quditstab/io.hpp"
#include "quditstab/json_io.hpp"
#include "quditstab/matrix.hpp"
#include "quditstab/modring.hpp"
#include "quditstab/oracle.hpp"
#include "quditstab/pauli.hpp"
#include "quditstab/snf.hpp"
#include "quditstab/standard_form.hpp"
