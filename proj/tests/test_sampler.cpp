// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
