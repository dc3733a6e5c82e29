#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drn/graph.hpp"
#include "drn/repr.hpp"

namespace drn {

// A stored matrix together with the labelled graph its rows are meant to
// represent. Loaded from the drnmat files under data/, embedded at build time.
struct StoredMatrix {
    std::string name;
    std::string graph;   // human description of the isomorphism class
    std::string status;  // valid | relabelled | erratum | corrected | witness
    std::vector<std::string> notes;
    Graph target;
    RepresentationMatrix matrix;
    std::string text;    // the file as stored
};

// Matrices transcribed from the literature, kept verbatim.
const std::vector<StoredMatrix>& transcribed_fixtures();
// Small-order witnesses found by exhaustive search where a block
// construction has no room to work.
const std::vector<StoredMatrix>& stored_witnesses();
const StoredMatrix& stored_matrix(std::string_view name);

StoredMatrix parse_stored_matrix(std::string_view name, std::string_view text);

}  // namespace drn
