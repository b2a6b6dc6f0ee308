// Copyright 2026 The allpass Authors
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

#ifndef ALLPASS_CSV_H
#define ALLPASS_CSV_H

#include <initializer_list>
#include <istream>
#include <string>
#include <string_view>

#include "allpass/cmt.h"

namespace allpass {

/// Fixed 9-significant-digit rendering used for every CSV cell.
std::string format_number(double value);

/// Comma-joined formatted numbers followed by '\n'.
std::string csv_row(std::initializer_list<double> values);

/// Reads a measured trace. The header must begin with freq_mhz,s21_re,s21_im;
/// further columns are ignored. Throws ParseError on malformed input.
SParamTrace read_trace_csv(std::istream &in);

}  // namespace allpass

#endif
