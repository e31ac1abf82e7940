// Copyright 2026 The incmon Authors
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

#ifndef INCMON_RATIONAL_H_
#define INCMON_RATIONAL_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace incmon {

using BigInt = boost::multiprecision::cpp_int;
// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is 1.
inline std::string FormatRational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace incmon

#endif  // INCMON_RATIONAL_H_
