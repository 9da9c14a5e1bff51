#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sievelab::verify {

struct Check {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // the measured constant or worst deviation
    double threshold = 0.0;  // infinity for report-only checks
    std::string note;
};

std::vector<std::string> suite_names();  // identities, poisson, sieve, spacing, arcs

// runs one named suite, or every suite for "all"; throws on unknown names
std::vector<Check> run_suite(const std::string& name);

bool all_pass(const std::vector<Check>& checks);
std::string format_check(const Check& c);

// samplers shared with the acceptance suite
struct MinorArcSample {
    double alpha;
    int64_t b;
    int64_t r;
};
std::vector<MinorArcSample> sample_minor_arcs(int64_t Q, double delta, int count,
                                              uint64_t seed);
// empty when the major-arc family is empty for these parameters
std::vector<double> sample_major_arcs(int64_t Q, double delta, int count, uint64_t seed);

}  // namespace sievelab::verify
