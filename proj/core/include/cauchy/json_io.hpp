#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/definiteness.hpp"
#include "cauchy/generating_vector.hpp"
#include "cauchy/spectral.hpp"
#include "cauchy/symmetric_tensor.hpp"
#include "cauchy/verify.hpp"

// JSON wire formats. All index positions on the wire are 1-based; the C++
// API everywhere else is 0-based.
namespace cauchy::io {

// Accepts {"c": [..], "m": int} for an explicit generating vector or
// {"n": int, "m": int} (optionally tagged "hilbert": true) for the Hilbert
// vector c_i = i - 1 + 1/m. Malformed input raises cauchy::Error with the
// offending field named.
GeneratingVector parse_generating_vector(const std::string& json_text);
GeneratingVector load_generating_vector(const std::string& path);

// {"order": m, "dim": n, "entries": [{"idx": [..], "value": v}, ..]} with
// sorted 1-based idx tuples in lexicographic order.
std::string dump_tensor_json(const SymmetricTensor& t);

struct TensorDump {
    int order = 0;
    int dim = 0;
    std::vector<std::pair<std::vector<int>, double>> entries;  // idx 1-based
};

TensorDump parse_tensor_dump(const std::string& json_text);

std::string definiteness_report_json(const DefinitenessReport& report,
                                     const RowSumProfile* profile);

std::string spectral_pair_json(const SpectralPair& pair);
std::string spectral_pairs_json(const std::vector<SpectralPair>& pairs);

std::string bounds_report_json(const BoundsReport& report);

std::string verify_report_json(const verify::Report& report,
                               std::uint64_t seed);

std::string build_summary_json(const SymmetricTensor& t, bool hankel,
                               const BuildDiagnostics& diagnostics);

}  // namespace cauchy::io
