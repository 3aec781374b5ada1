/*
   Copyright 2026 The asgenus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/// Umbrella header for the whole library.

#ifndef ASGENUS_ASGENUS_HPP
#define ASGENUS_ASGENUS_HPP

#include "asnorm.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "invariants.hpp"
#include "parse.hpp"
#include "polyring.hpp"
#include "ratfunc.hpp"
#include "report.hpp"
#include "symbols.hpp"
#include "zeta.hpp"

#endif  // ASGENUS_ASGENUS_HPP
