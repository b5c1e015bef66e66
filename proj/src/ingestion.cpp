#include "hop/ingestion.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hop/error.hpp"

namespace hop {
namespace {

std::vector<std::int64_t> read_integers(std::istream& is, const std::string& what) {
    std::vector<std::int64_t> out;
    std::string token;
    while (is >> token) {
        try {
            std::size_t used = 0;
            std::int64_t value = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw Error(Errc::kParseError, "non-integer token in " + what + ": " + token);
        }
    }
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::kMalformedDataset, "cannot open " + path);
    return f;
}

void sort_stable(ArrivalLog& log) {
    std::stable_sort(log.arrivals.begin(), log.arrivals.end(),
                     [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
}

}  // namespace

ArrivalLog load_dataset(std::istream& nverts_is, std::istream& simplices_is, std::istream& times_is) {
    const auto nverts = read_integers(nverts_is, "nverts");
    const auto flat = read_integers(simplices_is, "simplices");
    const auto times = read_integers(times_is, "times");
    if (nverts.size() != times.size()) {
        throw Error(Errc::kMalformedDataset, "nverts and times disagree on the arrival count");
    }
    std::int64_t expected = 0;
    for (std::int64_t n : nverts) {
        if (n < 1) throw Error(Errc::kMalformedDataset, "every arrival needs at least one vertex");
        expected += n;
    }
    if (expected != static_cast<std::int64_t>(flat.size())) {
        throw Error(Errc::kMalformedDataset, "vertex counts do not add up to the simplices file");
    }
    ArrivalLog log;
    log.arrivals.reserve(nverts.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < nverts.size(); ++i) {
        std::vector<VertexId> verts;
        verts.reserve(static_cast<std::size_t>(nverts[i]));
        for (std::int64_t j = 0; j < nverts[i]; ++j) {
            const std::int64_t v = flat[pos++];
            if (v < 0 || v > std::numeric_limits<VertexId>::max()) {
                throw Error(Errc::kMalformedDataset, "vertex id out of range");
            }
            verts.push_back(static_cast<VertexId>(v));
        }
        log.arrivals.push_back({times[i], make_simplex(std::move(verts))});
    }
    sort_stable(log);
    return log;
}

ArrivalLog load_dataset(const std::string& nverts_path, const std::string& simplices_path,
                        const std::string& times_path) {
    auto nverts = open_or_throw(nverts_path);
    auto simplices = open_or_throw(simplices_path);
    auto times = open_or_throw(times_path);
    return load_dataset(nverts, simplices, times);
}

void save_arrival_log(const ArrivalLog& log, std::ostream& os) {
    for (const auto& a : log.arrivals) {
        os << a.timestamp;
        for (VertexId v : a.simplex.vertices()) os << ' ' << v;
        os << '\n';
    }
}

ArrivalLog load_arrival_log(std::istream& is) {
    ArrivalLog log;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        auto values = read_integers(ls, "arrival line");
        if (values.size() < 2) {
            throw Error(Errc::kMalformedDataset, "arrival line needs a timestamp and a vertex");
        }
        std::vector<VertexId> verts;
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i] < 0 || values[i] > std::numeric_limits<VertexId>::max()) {
                throw Error(Errc::kMalformedDataset, "vertex id out of range");
            }
            verts.push_back(static_cast<VertexId>(values[i]));
        }
        log.arrivals.push_back({values[0], make_simplex(std::move(verts))});
    }
    sort_stable(log);
    return log;
}

Filtration slice(const ArrivalLog& log, std::int32_t T) {
    if (T < 2) throw Error(Errc::kInvalidArgument, "need at least 2 slices");
    if (log.arrivals.empty()) throw Error(Errc::kInvalidArgument, "arrival log is empty");
    const std::int64_t n = static_cast<std::int64_t>(log.arrivals.size());
    if (T > n) throw Error(Errc::kTooManySlices, "more slices than arrivals");

    Filtration f;
    const std::int64_t base = n / T, extra = n % T;
    std::size_t pos = 0;
    for (std::int32_t t = 0; t < T; ++t) {
        const std::int64_t len = base + (t < extra ? 1 : 0);
        std::vector<Simplex> arrivals;
        arrivals.reserve(static_cast<std::size_t>(len));
        for (std::int64_t i = 0; i < len; ++i) arrivals.push_back(log.arrivals[pos++].simplex);
        f.append_slice(std::move(arrivals));
    }
    return f;
}

}  // namespace hop
