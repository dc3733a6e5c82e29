// Regenerates data/witnesses: small cycles and paths whose width leaves the
// block constructions no room, solved at the width the family formula states.
#include <fstream>
#include <iostream>

#include "drn/constructions.hpp"
#include "drn/graph.hpp"
#include "drn/solver.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_witnesses <data/witnesses dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    struct Job {
        std::string family;
        std::string name;
    };
    const std::vector<Job> jobs = {{"C5", "cycle-5"}, {"C6", "cycle-6"}, {"C7", "cycle-7"}, {"C8", "cycle-8"},
                                   {"P5", "path-5"},  {"P6", "path-6"},  {"P7", "path-7"},  {"P8", "path-8"}};
    for (const auto& job : jobs) {
        const auto spec = drn::parse_family(job.family);
        const auto g = drn::build(spec);
        const int width = drn::claimed_width(spec);
        const auto r = drn::is_k_representable_serial(g, width);
        if (r.verdict != drn::Verdict::yes) {
            std::cerr << job.family << ": no witness at width " << width << "\n";
            return 1;
        }
        std::string edge_list;
        for (const auto& e : drn::edges(g)) {
            edge_list += " " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
        }
        const std::vector<std::string> comments = {
            "witness: " + job.name, "graph: " + job.family, "status: witness",
            "note: found by exhaustive search at width " + std::to_string(width), "target-edges:" + edge_list};
        std::ofstream(dir + "/" + job.name + ".drnmat") << drn::write_matrix(*r.witness, comments);
        std::cout << job.name << " width " << width << "\n";
    }
    return 0;
}
