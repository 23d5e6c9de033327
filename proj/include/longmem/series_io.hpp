#pragma once

#include <string>

#include "longmem/farima.hpp"

namespace longmem {

// CSV of one value per line (shortest round-trip formatting) plus a JSON
// metadata sidecar at <path>.meta.json: d, ar, ma, kind, law, nu,
// standardize, seed, n, M, burn_in, transform, and the MA-tail variance
// bound absorbed by truncation.
void save_series(const Series& s, const std::string& path);

// Reads the CSV; if the sidecar exists the spec/seed/truncation metadata is
// restored, otherwise the values come back under a default spec.
Series load_series(const std::string& path);

// Plain newline-separated values, no metadata (for external inputs).
std::vector<double> load_values(const std::string& path);

// O(M^{2d-1}) variance mass beyond the truncation point, the quantity the
// sidecar reports; zero when the tail is summable too fast to matter (d = 0).
double ma_tail_variance_bound(const ProcessSpec& spec, std::size_t M);

} // namespace longmem
