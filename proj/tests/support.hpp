#pragma once

#include <gtest/gtest.h>

#include "generators.hpp"

#define EXPECT_ELEMENT_NEAR(a, b, tol) \
    EXPECT_LE(::hyperslice::testing::distance((a), (b)), (tol)) << to_string(a) << " vs " << to_string(b)
