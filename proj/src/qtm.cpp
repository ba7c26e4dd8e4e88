#include "hcplab/qtm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <ostream>

#include "hcplab/error.hpp"
#include "hcplab/parallel.hpp"

namespace hcplab {

std::string Symbol::to_string() const {
    if (is_hit()) return "H";
    if (is_no_hit()) return "NH";
    if (is_blank()) return "_";
    return std::to_string(code_);
}

std::string MachineState::to_string() const {
    return is_final() ? "qF" : "q" + std::to_string(index_);
}

std::string TapeWord::to_string() const {
    if (cells.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i].to_string();
    }
    return out;
}

Superposition::Superposition(std::vector<Configuration> configs, int step) : step_(step) {
    std::sort(configs.begin(), configs.end(),
              [](const Configuration& a, const Configuration& b) { return a.key_less(b); });
    for (auto& c : configs) {
        if (!configs_.empty() && configs_.back().same_key(c)) {
            configs_.back().amplitude += c.amplitude;
        } else {
            configs_.push_back(std::move(c));
        }
    }
    std::erase_if(configs_, [this](const Configuration& c) {
        if (std::abs(c.amplitude) >= kPruneThreshold) return false;
        pruned_mass_ += c.amplitude * c.amplitude;
        return true;
    });
}

Superposition Superposition::initial() {
    return Superposition({Configuration{}}, 0);
}

double Superposition::norm_squared() const {
    double sum = 0;
    for (const auto& c : configs_) sum += c.amplitude * c.amplitude;
    return sum;
}

bool Superposition::all_final() const {
    return std::all_of(configs_.begin(), configs_.end(),
                       [](const Configuration& c) { return c.state.is_final(); });
}

std::vector<OracleBranch> oracle_extend(const Graph& g, std::span<const Symbol> tape) {
    const int n = g.n();
    if (tape.empty()) throw MalformedTape("empty tape");
    if (tape.front() != Symbol::vertex(1)) throw MalformedTape("path must start at vertex 1");
    if (tape.back().is_no_hit()) return {{Symbol::no_hit(), 1.0}};
    if (static_cast<int>(tape.size()) > n) throw MalformedTape("path longer than n");

    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < tape.size(); ++i) {
        const Symbol s = tape[i];
        if (!s.is_vertex() || s.as_vertex() > n) {
            throw MalformedTape("cell " + std::to_string(i + 1) + " holds '" + s.to_string() + "'");
        }
        if (visited[s.as_vertex()]) throw MalformedTape("vertex " + s.to_string() + " repeats");
        if (i > 0 && !g.adjacent(tape[i - 1].as_vertex(), s.as_vertex())) {
            throw MalformedTape("cells " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                " are not adjacent");
        }
        visited[s.as_vertex()] = 1;
    }

    const Vertex last = tape.back().as_vertex();
    if (static_cast<int>(tape.size()) == n) {
        const bool closes = n >= 3 && g.adjacent(last, 1);
        return {{closes ? Symbol::hit() : Symbol::no_hit(), 1.0}};
    }
    std::vector<OracleBranch> out;
    for (Vertex j : g.neighbors(last)) {
        if (!visited[j]) out.push_back({Symbol::vertex(j), 0.0});
    }
    if (out.empty()) return {{Symbol::no_hit(), 1.0}};
    const double amplitude = std::sqrt(1.0 / static_cast<double>(out.size()));
    for (auto& branch : out) branch.amplitude = amplitude;
    return out;
}

Superposition step(const Graph& g, const Superposition& s, QtmMode mode, Engine& rng) {
    const int n = g.n();
    std::vector<Configuration> next;
    next.reserve(s.size());
    for (const auto& c : s.configurations()) {
        if (c.state.is_final()) throw Error("step applied to a final configuration");
        const int k = c.state.index();
        if (k == 0) {
            Configuration succ{MachineState::phi(1), c.tape, c.amplitude};
            succ.tape.cells.push_back(Symbol::vertex(1));
            next.push_back(std::move(succ));
            continue;
        }
        const bool last_step = k >= n;
        const MachineState to = last_step ? MachineState::final_state() : MachineState::phi(k + 1);
        for (const auto& branch : oracle_extend(g, c.tape.cells)) {
            double amplitude = c.amplitude * branch.amplitude;
            if (last_step && mode == QtmMode::interference && branch.symbol.is_no_hit()) {
                if (rng() >> 63) amplitude = -amplitude;
            }
            Configuration succ{to, c.tape, amplitude};
            succ.tape.cells.push_back(branch.symbol);
            next.push_back(std::move(succ));
        }
    }
    return Superposition(std::move(next), s.step() + 1);
}

MeasurementResult measure_last_cell(const Superposition& s, QtmMode mode, InterferenceModel model) {
    if (!s.all_final()) throw NotFinal();
    MeasurementResult out;
    double no_hit_squares = 0;
    double no_hit_signed = 0;
    const Configuration* best = nullptr;
    for (const auto& c : s.configurations()) {
        const auto last = c.tape.last();
        if (last && last->is_hit()) {
            out.hit_mass += c.amplitude * c.amplitude;
            if (!best || std::abs(c.amplitude) > std::abs(best->amplitude)) best = &c;
        } else {
            no_hit_squares += c.amplitude * c.amplitude;
            no_hit_signed += c.amplitude;
        }
    }
    const bool collapse = mode == QtmMode::interference && model == InterferenceModel::collapse;
    out.no_hit_weight = collapse ? no_hit_signed * no_hit_signed : no_hit_squares;
    if (out.hit_mass > 0) {
        out.p_hit = out.hit_mass / (out.hit_mass + out.no_hit_weight);
        out.p_no_hit = 1 - out.p_hit;
        Cycle cycle;
        for (const Symbol& cell : best->tape.cells) {
            if (cell.is_vertex()) cycle.push_back(cell.as_vertex());
        }
        out.witness = std::move(cycle);
    }
    return out;
}

namespace {

void write_trace(std::ostream& os, const Superposition& s) {
    char amp[64];
    for (const auto& c : s.configurations()) {
        std::snprintf(amp, sizeof amp, "%.6f", c.amplitude);
        os << s.step() << ' ' << c.state.to_string() << ' ' << c.tape.to_string() << ' ' << amp << '\n';
    }
}

}  // namespace

QtmRun run(const Graph& g, const QtmOptions& options) {
    if (g.n() > options.cap) throw TooLarge(g.n(), options.cap);
    Engine rng = make_engine(options.seed, "qtm.signs", options.stream);
    QtmRun out;
    Superposition s = Superposition::initial();
    if (options.trace) write_trace(*options.trace, s);
    for (int i = 0; i <= g.n(); ++i) {
        s = step(g, s, options.mode, rng);
        out.pruned_mass += s.pruned_mass();
        out.norms.push_back(s.norm_squared());
        if (options.trace) write_trace(*options.trace, s);
    }
    out.measurement = measure_last_cell(s, options.mode, options.model);
    out.final_state = std::move(s);
    return out;
}

TrialsToHit trials_to_hit(const Graph& g, const QtmOptions& options, std::uint64_t max_trials) {
    for (std::uint64_t i = 0; i < max_trials; ++i) {
        QtmOptions trial = options;
        trial.stream = options.stream * max_trials + i;
        trial.trace = nullptr;
        const double p_hit = run(g, trial).measurement.p_hit;
        Engine shot = make_engine(options.seed, "qtm.measure", trial.stream);
        if (bernoulli(shot, p_hit)) return {i + 1, true};
    }
    return {max_trials, false};
}

double brownian_expectation(std::uint64_t t) {
    return std::sqrt(2.0 * static_cast<double>(t) / std::numbers::pi);
}

double brownian_sample(std::uint64_t t, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
    if (t == 0 || samples == 0) throw Error("brownian_sample requires t >= 1 and samples >= 1");
    std::uint64_t total = 0;
    std::mutex merge_mutex;
    parallel_chunks(samples, worker_count(threads), [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            Engine rng = make_engine(seed, "brownian", i);
            // Each bit of a 64-bit draw is one +-1 step.
            std::int64_t position = 0;
            for (std::uint64_t done = 0; done < t; done += 64) {
                const std::uint64_t width = std::min<std::uint64_t>(64, t - done);
                std::uint64_t bits = rng();
                if (width < 64) bits &= (std::uint64_t{1} << width) - 1;
                position += 2 * std::popcount(bits) - static_cast<std::int64_t>(width);
            }
            local += static_cast<std::uint64_t>(position < 0 ? -position : position);
        }
        std::lock_guard lock(merge_mutex);
        total += local;
    });
    return static_cast<double>(total) / static_cast<double>(samples);
}

}  // namespace hcplab
