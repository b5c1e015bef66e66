#include "label_set.hpp"

#include "hop/error.hpp"

namespace hop::detail {

SimplexKeySet fresh_faces(const Filtration& f, std::int32_t slice, int size) {
    if (slice < 1 || slice >= f.num_slices()) {
        throw Error(Errc::kLabelSliceMissing, "fresh_faces needs a slice with a predecessor");
    }
    const ComplexSnapshot& prev = f.snapshots[static_cast<std::size_t>(slice) - 1];
    const ComplexSnapshot& cur = f.snapshots[static_cast<std::size_t>(slice)];
    SimplexKeySet fresh(cur.max_vertex_id(), size);
    SimplexKeySet checked(cur.max_vertex_id(), size);
    std::vector<VertexId> buf;
    for (const Simplex& arrival : f.slice_arrivals[static_cast<std::size_t>(slice)]) {
        for_each_subset(arrival.vertices(), size, buf, [&](std::span<const VertexId> face) {
            if (checked.contains(face)) return;
            checked.add(face);
            if (!prev.contains(make_simplex(std::vector<VertexId>(face.begin(), face.end())))) {
                fresh.add(face);
            }
        });
    }
    return fresh;
}

}  // namespace hop::detail
