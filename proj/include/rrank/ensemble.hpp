#pragma once
// Late fusion: the elementwise mean of per-model similarity matrices.
// Per entry, the addends are sorted by value before the 64-bit accumulation,
// which makes the result independent of model order bit for bit.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrank/types.hpp"

namespace rrank {

inline MatrixF ensemble_mean(const std::vector<MatrixF>& inputs) {
    if (inputs.empty())
        throw std::invalid_argument("ensemble_mean: input list is empty");
    const Eigen::Index rows = inputs.front().rows();
    const Eigen::Index cols = inputs.front().cols();
    for (std::size_t k = 1; k < inputs.size(); ++k) {
        if (inputs[k].rows() != rows || inputs[k].cols() != cols)
            throw std::invalid_argument(
                "ensemble_mean: matrix " + std::to_string(k) + " has shape " +
                std::to_string(inputs[k].rows()) + "x" + std::to_string(inputs[k].cols()) +
                ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }

    MatrixF out(rows, cols);
    std::vector<double> addends(inputs.size());
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            for (std::size_t k = 0; k < inputs.size(); ++k)
                addends[k] = static_cast<double>(inputs[k](i, j));
            std::sort(addends.begin(), addends.end());
            double sum = 0.0;
            for (double v : addends) sum += v;
            out(i, j) = static_cast<float>(sum / static_cast<double>(inputs.size()));
        }
    return out;
}

}  // namespace rrank
