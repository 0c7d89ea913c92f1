/*
 * Copyright 2026 The topolab Authors
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

#ifndef TOPOLAB_SWEEP_HPP
#define TOPOLAB_SWEEP_HPP

#include <cstddef>
#include <functional>

namespace topolab {

/// Worker count for a requested value; 0 means hardware concurrency.
int resolve_jobs(int jobs);

/**
 * Calls body(i) once for every i in [0, count) on up to `jobs` threads.
 * Units are claimed from a shared counter, so callers must write results
 * into per-unit slots and merge them in unit order afterwards. The first
 * exception thrown by any unit is rethrown once all workers have stopped.
 */
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace topolab

#endif  // TOPOLAB_SWEEP_HPP
