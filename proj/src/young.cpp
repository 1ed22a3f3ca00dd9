// Copyright 2026 The gateid Authors
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

#include <algorithm>
#include <functional>

#include "gateid/errors.hpp"
#include "gateid/groups.hpp"

namespace gateid::groups {

std::size_t YoungDiagram::boxes() const {
    std::size_t n = 0;
    for (std::size_t r : rows) {
        n += r;
    }
    return n;
}

std::string YoungDiagram::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(rows[i]);
    }
    return out + ")";
}

std::vector<YoungDiagram> partitions(std::size_t n, std::size_t max_rows) {
    std::vector<YoungDiagram> out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left,
                                                            std::size_t cap) {
        if (left == 0) {
            out.push_back({current});
            return;
        }
        if (current.size() == max_rows) {
            return;
        }
        for (std::size_t part = std::min(left, cap); part >= 1; --part) {
            current.push_back(part);
            rec(left - part, part);
            current.pop_back();
        }
    };
    if (n > 0) {
        rec(n, n);
    }
    return out;
}

std::vector<std::size_t> hook_lengths(const YoungDiagram &shape) {
    std::vector<std::size_t> hooks;
    for (std::size_t i = 0; i < shape.rows.size(); ++i) {
        for (std::size_t j = 0; j < shape.rows[i]; ++j) {
            const std::size_t arm = shape.rows[i] - j - 1;
            std::size_t leg = 0;
            for (std::size_t k = i + 1; k < shape.rows.size() && shape.rows[k] > j; ++k) {
                ++leg;
            }
            hooks.push_back(arm + leg + 1);
        }
    }
    return hooks;
}

namespace {

BigInt hook_product(const YoungDiagram &shape) {
    BigInt prod = 1;
    for (std::size_t h : hook_lengths(shape)) {
        prod *= h;
    }
    return prod;
}

} // namespace

BigInt unitary_irrep_dim(const YoungDiagram &shape, std::size_t d) {
    if (shape.rows.size() > d) {
        return 0;
    }
    BigInt num = 1;
    for (std::size_t i = 0; i < shape.rows.size(); ++i) {
        for (std::size_t j = 0; j < shape.rows[i]; ++j) {
            num *= d + j - i; // 0-based indices: d + j - i >= 1 since i < d
        }
    }
    return num / hook_product(shape);
}

BigInt symmetric_irrep_dim(const YoungDiagram &shape) {
    return factorial(shape.boxes()) / hook_product(shape);
}

YoungDecomposition young_decomposition(std::size_t n, std::size_t d) {
    if (n < 1 || n > kMaxYoungBoxes) {
        throw InvalidArgument("young_decomposition supports 1 <= N <= " +
                              std::to_string(kMaxYoungBoxes));
    }
    if (d < 2) {
        throw InvalidArgument("young_decomposition requires d >= 2");
    }
    YoungDecomposition out;
    out.ancilla_bound = 0;
    for (auto &shape : partitions(n, d)) {
        YoungIrrep irrep{shape, unitary_irrep_dim(shape, d), symmetric_irrep_dim(shape)};
        const BigInt ratio = (irrep.dim + irrep.mult - 1) / irrep.mult;
        out.ancilla_bound = std::max(out.ancilla_bound, ratio);
        out.irreps.push_back(std::move(irrep));
    }
    return out;
}

ExtraBlock min_extra_block_size(std::size_t d, std::uint64_t d_a) {
    if (d < 2 || d_a < 1) {
        throw InvalidArgument("min_extra_block_size requires d >= 2 and d_A >= 1");
    }
    constexpr std::size_t kMaxRowLength = 64;
    for (std::size_t l = 1; l <= kMaxRowLength; ++l) {
        const YoungDiagram rect{std::vector<std::size_t>(d, l)};
        BigInt m = symmetric_irrep_dim(rect);
        if (m >= d_a) {
            return {d * l, l, std::move(m)};
        }
    }
    throw Infeasible("no rectangular diagram with row length <= 64 reaches "
                     "multiplicity " + std::to_string(d_a));
}

} // namespace gateid::groups
