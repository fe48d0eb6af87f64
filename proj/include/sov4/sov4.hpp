// Copyright 2026 The sov4 Authors
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

#include "sov4/errors.hpp"
#include "sov4/scalar.hpp"
#include "sov4/matrix.hpp"
#include "sov4/linalg.hpp"
#include "sov4/exterior.hpp"
#include "sov4/e7.hpp"
#include "sov4/modular.hpp"
#include "sov4/canonical.hpp"
#include "sov4/jordan.hpp"
#include "sov4/invariants.hpp"
#include "sov4/classify.hpp"
#include "sov4/random.hpp"
#include "sov4/factor.hpp"
#include "sov4/io.hpp"
#include "sov4/verify.hpp"
