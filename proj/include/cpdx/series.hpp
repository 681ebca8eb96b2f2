#pragma once

#include <string>
#include <vector>

namespace cpdx {

enum class Kind { binary, count };

std::string kind_name(Kind kind);
Kind parse_kind(const std::string& name);

// One time-indexed sequence of binary or count observations.
struct ChannelSeries {
    Kind kind = Kind::binary;
    std::vector<long> values;

    long length() const { return static_cast<long>(values.size()); }
};

// Throws std::invalid_argument unless length >= 2, entries are non-negative
// and, for binary series, within {0, 1}.
void validate_series(const ChannelSeries& series);

// Partial sums S_1..S_T; sums[t - 1] covers the first t observations.
std::vector<long> prefix_sums(const std::vector<long>& values);

inline long series_total(const ChannelSeries& series) {
    long total = 0;
    for (long v : series.values) total += v;
    return total;
}

// m channels by T epochs, row-major.
struct ChannelMatrix {
    Kind kind = Kind::binary;
    long channels = 0;
    long length = 0;
    std::vector<std::string> ids;   // size == channels
    std::vector<long> data;         // size == channels * length

    long at(long channel, long t) const { return data[channel * length + t]; }
    long& at(long channel, long t) { return data[channel * length + t]; }

    ChannelSeries row(long channel) const {
        ChannelSeries s;
        s.kind = kind;
        s.values.assign(data.begin() + channel * length, data.begin() + (channel + 1) * length);
        return s;
    }
};

void validate_matrix(const ChannelMatrix& matrix);

}  // namespace cpdx
