#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "longmem/farima.hpp"
#include "longmem/memory_theory.hpp"
#include "longmem/transforms.hpp"

namespace longmem {

struct TransformEntry {
    Transform transform;
    int analytic_rank = -1;        // -1: no claim; 0: effectively infinite rank
    bool auto_option_rank = false; // derive the rank from the replication-0 marginal
};

struct ModelEntry {
    std::string label;
    ProcessSpec spec;
    // Rescale simulated paths to unit marginal sd before transforming, so
    // shape-sensitive transforms (Hermite-style polynomials, sin, exp,
    // thresholds) see the marginal their rank catalog assumes.  Stationary
    // models only.
    bool unit_marginal = false;
    std::vector<TransformEntry> transforms;
};

struct ExperimentConfig {
    std::vector<ModelEntry> models;
    std::size_t n = 2000;
    std::size_t replications = 2000;
    std::string bandwidth_rule = "auto"; // "auto" -> floor(n^{4/5}), or an integer
    std::uint64_t base_seed = 20240601;  // replication r simulates with base_seed + r
    std::string output_path;             // empty: stdout only
    std::size_t truncation = 0;          // MA truncation; 0 -> 2n
    double option_rank_tol = 0.05;       // threshold for auto option-rank decisions
};

struct TableRow {
    std::string model;
    double d = 0.0;
    std::string transform;
    int rank = -1; // -1 blank, 0 infinite
    bool has_theory = false;
    MemoryClass theory;
    double mean_dhat = 0.0; // over the non-degenerate estimates
    double sd_dhat = 0.0;   // empirical sd, not standard error of the mean
    std::size_t N = 0;      // non-degenerate count actually aggregated
    std::size_t n = 0;
    std::size_t degenerate_count = 0;
};

// Flat key/value text with [model <label>] sections; see README for the
// grammar.  Throws std::invalid_argument with a line number on bad input.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

std::size_t resolve_bandwidth(const std::string& rule, std::size_t n);

// The closed-form memory claim for one cell; has = false where the theory is
// silent (blank table cells).
struct TheoryCell {
    bool has = false;
    MemoryClass value;
};
TheoryCell theory_for_cell(const ProcessSpec& spec, const Transform& t, int rank);

// Catalog rank of a transform under a symmetric unit-variance marginal
// (presets rescale to match); -1 for shapes outside the catalog.
int catalog_rank(const Transform& t);

std::vector<TableRow> run_experiment(const ExperimentConfig& cfg, unsigned threads = 1);

enum class TableId { T1, T2, T4, T5 };
TableId table_id_from_name(const std::string& name);

// The four preset grids at a given scale: N and n are both multiplied by
// scale (n_override / reps_override pin them explicitly when nonzero).
ExperimentConfig table_preset(TableId id, double scale, std::size_t n_override = 0,
                              std::size_t reps_override = 0);
std::vector<TableRow> reproduce_table(TableId id, double scale, unsigned threads = 1);

// Fixed header model,d,transform,rank,theory,mean_dhat,sd_dhat,N,n,degenerate_count;
// fixed float formats so identical configs give byte-identical files.
std::string render_rows_csv(const std::vector<TableRow>& rows);

} // namespace longmem
