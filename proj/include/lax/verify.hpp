#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lax/bicategory.hpp"
#include "lax/model_io.hpp"

namespace lax {

enum class CheckVerdict { pass, fail, undetermined };
std::string to_string(CheckVerdict v);

// One verified statement about one subject.
struct CheckRecord {
    std::string check;
    // Name of the statement being certified.
    std::string anchor;
    std::string subject;
    CheckVerdict verdict = CheckVerdict::undetermined;
    // Instances aggregated into this record.
    std::size_t instances = 1;
    std::string detail;
};

// Aggregates many instances of one law into a single record. A law with no
// instance passes vacuously and says so in the detail.
class Tally {
public:
    Tally(std::string check, std::string anchor, std::string subject)
        : check_(std::move(check)), anchor_(std::move(anchor)), subject_(std::move(subject)) {}

    void pass() { ++instances_; }
    void fail(const std::string& why);
    void undetermined(const std::string& why);
    void add(const LawCheck& c);
    void add(const EquivalenceResult& r, const std::string& what);
    // Runs f, counting BoundExhausted as undetermined and other LaxError as a
    // failure; f reports through the tally itself.
    template <class F>
    void guard(const std::string& what, F&& f) {
        try {
            f();
        } catch (const BoundExhausted& e) {
            undetermined(what + ": " + e.what());
        } catch (const LaxError& e) {
            fail(what + ": " + e.what());
        }
    }

    std::size_t instances() const { return instances_; }
    std::size_t failures() const { return failures_; }
    std::size_t undetermined_count() const { return undetermined_; }
    CheckRecord record() const;

private:
    std::string check_;
    std::string anchor_;
    std::string subject_;
    std::size_t instances_ = 0;
    std::size_t failures_ = 0;
    std::size_t undetermined_ = 0;
    std::string first_failure_;
    std::string first_undetermined_;
};

struct SamplingOptions {
    int apex_bound = 3;
    int ext_bound = 3;
    // Negative selects the model default.
    int witness_bound = -1;
    unsigned seed = 1;
    int samples = 100;
    // Largest object size the sampler draws.
    int max_object_size = 2;
};

// One record per axiom.
std::vector<CheckRecord> axiom_records(const TwoCatModel& m, int witness_bound);

// Reflexivity on every cell, symmetry on every parallel pair.
CheckRecord equivalence_exhaustive(const TwoCatModel& m, const std::vector<TwoMorphism>& pool, int witness_bound);
// Transitivity on seeded triples of parallel cells from the pool; the record
// counts triples whose premises hold.
CheckRecord transitivity_sampled(const TwoCatModel& m, const std::vector<TwoMorphism>& pool, std::size_t triples,
                                 unsigned seed, int witness_bound);
// Unit laws on every cell, associativity on every composable triple and
// representative independence on every composable pair with every choice of
// equivalent representatives, all within the pool.
std::vector<CheckRecord> vertical_exhaustive(const TwoCatModel& m, const std::vector<TwoMorphism>& pool,
                                             int witness_bound);
// Every 2-morphism between cospans from a to b with the given bounds.
std::vector<TwoMorphism> two_cell_pool(const TwoCatModel& m, const Obj& a, const Obj& b, int apex_bound,
                                       int ext_bound);

// Sampled counterparts: reflexivity, symmetry and transitivity.
std::vector<CheckRecord> equivalence_sampled(const TwoCatModel& m, const SamplingOptions& o);
// Unit laws, associativity and representative independence.
std::vector<CheckRecord> vertical_sampled(const TwoCatModel& m, const SamplingOptions& o);
// Identity preservation, whiskering and interchange.
std::vector<CheckRecord> horizontal_sampled(const TwoCatModel& m, const SamplingOptions& o);
// Pentagon, triangle, associator invertibility and naturality.
std::vector<CheckRecord> bicategory_sampled(const TwoCatModel& m, const SamplingOptions& o);
// Basic Omega cells over every pair and triple of Sigma-completions of
// sampled spans: self cells, inverses and composites.
std::vector<CheckRecord> omega_laws_sampled(const TwoCatModel& m, const SamplingOptions& o);
// Over every enumerated level-3 scheme of `borders` sampled borders: all
// pairs of paths of length <= 2 with equal endpoints, all pairs of canonical
// paths of multi-tagged schemes, and every step that puts back the tiles it
// removes.
std::vector<CheckRecord> omega_paths_sampled(const TwoCatModel& m, const SamplingOptions& o, int borders);

// Every Sigma-object of the enumerated universe.
std::vector<Cell1> all_sigma_objects(const TwoCatModel& m);
CheckRecord lari_record(const TwoCatModel& m, const Cell1& s, int ext_bound, int witness_bound);
CheckRecord bc_record(const TwoCatModel& m, const Square& sq, int ext_bound, int witness_bound);
// One record per hom-set, or a single failing record naming the violated
// classical axiom.
std::vector<CheckRecord> gz_records(const FiniteCategorySpec& spec, int apex_bound, int ext_bound);

// Command-line configuration.
struct RunConfig {
    std::string model_path;
    std::string command;
    int apex_bound = 3;
    int ext_bound = 3;
    // Unset selects the model default.
    std::optional<int> witness_bound;
    unsigned seed = 1;
    std::string out;
};

// Unknown command or invalid bounds.
struct UsageError : LaxError {
    using LaxError::LaxError;
};

struct Report {
    std::string command;
    std::string model;
    RunConfig config;
    // Set for sampled commands.
    std::optional<int> samples;
    std::vector<CheckRecord> checks;

    std::size_t count(CheckVerdict v) const;
    bool passed() const;
};

const std::vector<std::string>& command_names();
// UsageError on unknown commands and non-positive bounds.
void validate_config(const RunConfig& c);
Report run_command(const ModelFile& mf, const RunConfig& c);
// Loads the model, then run_command.
Report run(const RunConfig& c);
// Pretty-printed JSON ending in a newline; equal reports give equal text.
std::string report_json(const Report& r);

}  // namespace lax
