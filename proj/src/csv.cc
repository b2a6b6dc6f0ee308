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

#include "allpass/csv.h"

#include <charconv>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "allpass/error.h"

namespace allpass {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    size_t begin = 0;
    while (true) {
        const size_t comma = line.find(',', begin);
        cells.push_back(line.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin));
        if (comma == std::string_view::npos) {
            return cells;
        }
        begin = comma + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_cell(std::string_view cell, size_t line_no) {
    cell = trim(cell);
    if (!cell.empty() && cell.front() == '+') {
        cell.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
        throw ParseError(fmt::format("line {}: '{}' is not a finite number", line_no, cell));
    }
    return value;
}

}  // namespace

std::string format_number(double value) {
    return fmt::format("{:.9g}", value);
}

std::string csv_row(std::initializer_list<double> values) {
    std::string out;
    bool first = true;
    for (double v : values) {
        if (!first) {
            out += ',';
        }
        out += format_number(v);
        first = false;
    }
    out += '\n';
    return out;
}

SParamTrace read_trace_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("trace file is empty");
    }
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);
    }
    const auto header = split(trim(line));
    if (header.size() < 3 || trim(header[0]) != "freq_mhz" || trim(header[1]) != "s21_re" ||
        trim(header[2]) != "s21_im") {
        throw ParseError("trace header must start with freq_mhz,s21_re,s21_im");
    }

    SParamTrace trace;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(trim(line));
        if (cells.size() < 3) {
            throw ParseError(fmt::format("line {}: expected at least 3 columns", line_no));
        }
        trace.freq_mhz.push_back(parse_cell(cells[0], line_no));
        trace.s21.emplace_back(parse_cell(cells[1], line_no), parse_cell(cells[2], line_no));
    }
    try {
        trace.validate();
    } catch (const DomainError &e) {
        throw ParseError(e.what());
    }
    return trace;
}

}  // namespace allpass
