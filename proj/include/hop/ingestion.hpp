#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hop/filtration.hpp"
#include "hop/simplex.hpp"

namespace hop {

/// Timestamped arrivals, sorted by timestamp (stable within ties).
struct ArrivalLog {
    struct Arrival {
        std::int64_t timestamp = 0;
        Simplex simplex;
    };
    std::vector<Arrival> arrivals;
};

/// Load the three-file dataset format: per-simplex vertex counts, flattened
/// vertex ids, timestamps. Throws ParseError on non-integer tokens and
/// MalformedDataset when the files disagree on lengths.
ArrivalLog load_dataset(const std::string& nverts_path, const std::string& simplices_path,
                        const std::string& times_path);
ArrivalLog load_dataset(std::istream& nverts, std::istream& simplices, std::istream& times);

/// Normalized single-file format: one line per arrival,
/// `timestamp v1 v2 ... vk`.
void save_arrival_log(const ArrivalLog& log, std::ostream& os);
ArrivalLog load_arrival_log(std::istream& is);

/// Split the log into T contiguous groups of near-equal count in arrival
/// order (the first count%T groups get one extra) and build the cumulative
/// filtration. Throws TooManySlices when T exceeds the arrival count.
Filtration slice(const ArrivalLog& log, std::int32_t T);

}  // namespace hop
