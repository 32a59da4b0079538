// Copyright 2026 The iprqs Authors
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

#include <gtest/gtest.h>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/site_register.hpp"

namespace iprqs {
namespace {

TEST(SiteRegister, TotalDimIsProductOfLocalDims) {
  const SiteRegister reg({2, 3, 4});
  EXPECT_EQ(reg.size(), 3u);
  EXPECT_EQ(reg.total_dim(), 24u);
  EXPECT_EQ(reg.stride(0), 12u);
  EXPECT_EQ(reg.stride(2), 1u);
  EXPECT_FALSE(reg.uniform_dim().has_value());
  EXPECT_EQ(SiteRegister::uniform(3, 3).uniform_dim(), 3u);
}

TEST(SiteRegister, RejectsLocalDimBelowTwo) {
  try {
    SiteRegister({2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_register);
  }
}

TEST(SiteRegister, MixedRadixRoundTrip) {
  const SiteRegister reg({2, 3});
  // Site 0 is the most significant digit.
  for (Digit a = 0; a < 2; ++a) {
    for (Digit b = 0; b < 3; ++b) {
      const std::vector<Digit> d{a, b};
      const Index idx = reg.index_of(d);
      EXPECT_EQ(idx, a * 3 + b);
      EXPECT_EQ(reg.digits_of(idx), d);
      EXPECT_EQ(reg.digit_at(idx, 1), b);
    }
  }
}

TEST(SiteRegister, DigitOutOfRange) {
  const SiteRegister reg({2, 3});
  const std::vector<Digit> bad{1, 3};
  EXPECT_THROW(reg.index_of(bad), Error);
}

TEST(SiteRegister, Concat) {
  EXPECT_EQ(concat(SiteRegister({2}), SiteRegister({3, 2})), SiteRegister({2, 3, 2}));
}

}  // namespace
}  // namespace iprqs
