// Copyright 2026 The Rollchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rollchain::netsim {

using Engine = std::mt19937_64;

//! Stable seed derivation: folds keys into `master` with splitmix64 so every
//! sweep cell and trial gets its own stream regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) noexcept;

Engine make_engine(std::uint64_t seed);

}  // namespace rollchain::netsim
