/*
 *   Copyright 2026 The bqlib Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


/// Umbrella header for the whole library.

#ifndef BQ_BQ_HPP
#define BQ_BQ_HPP

#include "enumeration.hpp"
#include "errors.hpp"
#include "homomorphisms.hpp"
#include "io.hpp"
#include "morphisms.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "products.hpp"
#include "report.hpp"
#include "structures.hpp"
#include "tables.hpp"
#include "union_find.hpp"

#endif  // BQ_BQ_HPP
