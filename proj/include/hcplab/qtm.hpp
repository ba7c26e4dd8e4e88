#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcplab/exact.hpp"
#include "hcplab/graph.hpp"
#include "hcplab/rng.hpp"

namespace hcplab {

/// Tape symbol: a vertex 1..n, H (cycle found), NH (no cycle on this branch) or blank.
class Symbol {
public:
    static constexpr Symbol blank() { return Symbol(0); }
    static constexpr Symbol hit() { return Symbol(-1); }
    static constexpr Symbol no_hit() { return Symbol(-2); }
    static constexpr Symbol vertex(Vertex v) { return Symbol(v); }

    constexpr bool is_vertex() const { return code_ > 0; }
    constexpr bool is_hit() const { return code_ == -1; }
    constexpr bool is_no_hit() const { return code_ == -2; }
    constexpr bool is_blank() const { return code_ == 0; }
    constexpr Vertex as_vertex() const { return code_; }

    std::string to_string() const;

    friend constexpr auto operator<=>(Symbol, Symbol) = default;

private:
    constexpr explicit Symbol(int code) : code_(code) {}
    int code_;
};

/// Internal state Phi_0 .. Phi_n, or the final state Phi_F.
class MachineState {
public:
    static constexpr MachineState phi(int k) { return MachineState(k); }
    static constexpr MachineState final_state() { return MachineState(kFinal); }

    constexpr bool is_final() const { return index_ == kFinal; }
    constexpr int index() const { return index_; }
    std::string to_string() const;

    friend constexpr auto operator<=>(MachineState, MachineState) = default;

private:
    static constexpr int kFinal = std::numeric_limits<int>::max();
    constexpr explicit MachineState(int index) : index_(index) {}
    int index_;
};

/// Written part of the tape; the head sits on the first blank cell, right of
/// every written cell, and only ever moves right.
struct TapeWord {
    std::vector<Symbol> cells;

    std::size_t head() const noexcept { return cells.size(); }
    std::optional<Symbol> last() const {
        return cells.empty() ? std::nullopt : std::optional<Symbol>(cells.back());
    }
    std::string to_string() const;

    friend auto operator<=>(const TapeWord&, const TapeWord&) = default;
    friend bool operator==(const TapeWord&, const TapeWord&) = default;
};

struct Configuration {
    MachineState state = MachineState::phi(0);
    TapeWord tape;
    double amplitude = 1;

    /// Identity for interference: (state, tape). Amplitude is not part of it.
    bool same_key(const Configuration& other) const {
        return state == other.state && tape == other.tape;
    }
    bool key_less(const Configuration& other) const {
        if (state != other.state) return state < other.state;
        return tape < other.tape;
    }
};

/// Configurations sorted by key with unique keys; zero amplitudes are pruned.
class Superposition {
public:
    Superposition() = default;
    /// Sorts, merges identical keys by summing amplitudes, prunes near-zero entries.
    Superposition(std::vector<Configuration> configs, int step);

    /// (Phi_0, blank tape) with amplitude 1.
    static Superposition initial();

    const std::vector<Configuration>& configurations() const noexcept { return configs_; }
    std::size_t size() const noexcept { return configs_.size(); }
    int step() const noexcept { return step_; }
    /// Squared amplitude dropped by pruning while building this superposition.
    double pruned_mass() const noexcept { return pruned_mass_; }

    double norm_squared() const;
    bool all_final() const;

private:
    std::vector<Configuration> configs_;
    int step_ = 0;
    double pruned_mass_ = 0;
};

inline constexpr double kPruneThreshold = 1e-15;

enum class QtmMode { standard, interference };

/// How NH amplitudes combine at measurement in interference mode.
/// collapse: all NH branches sum into one signed accumulator.
/// strict: distinct tapes never interfere (literal QTM semantics).
enum class InterferenceModel { collapse, strict };

struct OracleBranch {
    Symbol symbol;
    double amplitude;
};

/// Graph oracle applied to the written tape.
///
/// Extends a simple path from vertex 1 by each unvisited neighbor j of its last
/// vertex i with amplitude sqrt(1 / (d_i - m_i)); writes NH when the path is
/// stuck, already ends in NH, or has length n without a closing edge; writes H
/// when the path has length n (n >= 3) and closes back to 1.
/// Throws MalformedTape.
std::vector<OracleBranch> oracle_extend(const Graph& g, std::span<const Symbol> tape);

/// One application of the transition function to every configuration.
/// At Phi_n -> Phi_F in interference mode each NH successor amplitude gets a
/// random sign drawn from `rng` (one draw per NH branch, in key order).
Superposition step(const Graph& g, const Superposition& s, QtmMode mode, Engine& rng);

struct MeasurementResult {
    double p_hit = 0;
    double p_no_hit = 1;
    double hit_mass = 0;        ///< sum of squared H amplitudes
    double no_hit_weight = 0;   ///< NH contribution before renormalization
    std::optional<Cycle> witness;
};

/// Measures the last written cell. Throws NotFinal.
MeasurementResult measure_last_cell(const Superposition& s, QtmMode mode,
                                    InterferenceModel model = InterferenceModel::collapse);

inline constexpr int kQtmDefaultCap = 12;

struct QtmOptions {
    QtmMode mode = QtmMode::standard;
    InterferenceModel model = InterferenceModel::collapse;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;     ///< sub-stream index (trial number)
    int cap = kQtmDefaultCap;
    std::ostream* trace = nullptr; ///< "step state tape amplitude" per configuration
};

struct QtmRun {
    Superposition final_state;
    MeasurementResult measurement;
    std::vector<double> norms;  ///< squared norm after each of the n+1 steps
    double pruned_mass = 0;     ///< total over the run
};

/// Executes exactly n+1 steps, then measures. Throws TooLarge when n > cap.
QtmRun run(const Graph& g, const QtmOptions& options);

struct TrialsToHit {
    std::uint64_t trials = 0;  ///< equals max_trials when no hit occurred
    bool hit = false;
};

/// Independent full runs, each followed by one sampled measurement, until H.
TrialsToHit trials_to_hit(const Graph& g, const QtmOptions& options, std::uint64_t max_trials);

/// sqrt(2t / pi): asymptotic mean distance of a +-1 walk after t steps.
double brownian_expectation(std::uint64_t t);

/// Mean of |sum of t random +-1| over `samples` seeded walks.
double brownian_sample(std::uint64_t t, std::uint64_t samples, std::uint64_t seed,
                       unsigned threads = 0);

}  // namespace hcplab
