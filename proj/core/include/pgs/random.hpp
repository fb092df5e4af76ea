// Copyright 2026 The pgsim Authors
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

// Counter-based seeding.
//
// Every random draw in the simulator is a pure function of a 64-bit key, so
// Monte-Carlo work items can run in any order on any thread and still
// reproduce. The mixing function is the SplitMix64 finalizer (Steele, Lea &
// Flood 2014), the same one used to seed the xoshiro family.

#ifndef PGS_RANDOM_HPP_
#define PGS_RANDOM_HPP_

#include <cstdint>

namespace pgs {

// SplitMix64 output for state `x` (one step: add the golden gamma, mix).
std::uint64_t splitmix64(std::uint64_t x);

// Key for work item `index` of the stream identified by `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

// Uniform double in [0, 1) built from the top 53 bits of splitmix64(key).
double uniform01(std::uint64_t key);

}  // namespace pgs

#endif  // PGS_RANDOM_HPP_
