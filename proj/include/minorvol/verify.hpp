#ifndef MINORVOL_VERIFY_HPP
#define MINORVOL_VERIFY_HPP

#include "minorvol/decompose.hpp"
#include "minorvol/extremal.hpp"
#include "minorvol/graph.hpp"
#include "minorvol/volume.hpp"

#include <string>
#include <vector>

namespace minorvol {

struct SuiteCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    unsigned long seed = 0;
    std::vector<SuiteCase> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    long failures() const {
        long f = 0;
        for (const auto& c : cases) f += !c.pass;
        return f;
    }
};

struct SuiteOptions {
    unsigned long seed = 0;
    int cases = 200;
    int max_vertices = 6;
    int support = 4;
    int jobs = 1;
};

std::vector<std::string> suite_names();

/// Runs one of: duality, superadditivity, fourcolor, twothirds, sandwich,
/// bipartite-vol, rounding, normbound, decompositions, mader.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

std::string to_json(const SuiteResult& r);
std::string to_tsv(const SuiteResult& r);

}  // namespace minorvol

#endif  // MINORVOL_VERIFY_HPP
