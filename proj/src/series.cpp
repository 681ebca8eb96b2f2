#include "cpdx/series.hpp"

#include <stdexcept>

namespace cpdx {

std::string kind_name(Kind kind) { return kind == Kind::binary ? "binary" : "count"; }

Kind parse_kind(const std::string& name) {
    if (name == "binary") return Kind::binary;
    if (name == "count") return Kind::count;
    throw std::invalid_argument("unknown kind '" + name + "' (expected binary or count)");
}

void validate_series(const ChannelSeries& series) {
    if (series.values.size() < 2) throw std::invalid_argument("series must have length >= 2");
    for (std::size_t t = 0; t < series.values.size(); ++t) {
        const long v = series.values[t];
        if (v < 0)
            throw std::invalid_argument("negative value at position " + std::to_string(t + 1));
        if (series.kind == Kind::binary && v > 1)
            throw std::invalid_argument("non-binary value " + std::to_string(v) + " at position " +
                                        std::to_string(t + 1));
    }
}

std::vector<long> prefix_sums(const std::vector<long>& values) {
    std::vector<long> sums(values.size());
    long acc = 0;
    for (std::size_t t = 0; t < values.size(); ++t) {
        acc += values[t];
        sums[t] = acc;
    }
    return sums;
}

void validate_matrix(const ChannelMatrix& matrix) {
    if (matrix.channels < 1) throw std::invalid_argument("matrix must have at least one channel");
    if (matrix.length < 2) throw std::invalid_argument("matrix epochs must number >= 2");
    if (static_cast<long>(matrix.ids.size()) != matrix.channels)
        throw std::invalid_argument("channel id count does not match channel count");
    if (static_cast<long>(matrix.data.size()) != matrix.channels * matrix.length)
        throw std::invalid_argument("matrix data size does not match dimensions");
    for (long j = 0; j < matrix.channels; ++j) {
        for (long t = 0; t < matrix.length; ++t) {
            const long v = matrix.at(j, t);
            if (v < 0 || (matrix.kind == Kind::binary && v > 1))
                throw std::invalid_argument("invalid value " + std::to_string(v) + " in channel " +
                                            std::to_string(j + 1) + " epoch " + std::to_string(t + 1));
        }
    }
}

}  // namespace cpdx
